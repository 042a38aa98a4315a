#include "godgraph/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>

#include "godgraph/util.hpp"

namespace godgraph::oracle {

namespace {

std::vector<std::vector<Vertex>> closure_adjacency(const GameGraph& g, Mode mode) {
  std::vector<std::vector<Vertex>> adj = g.out;
  if (mode == Mode::undirected)
    for (std::size_t u = 0; u < g.out.size(); ++u)
      for (const Vertex v : g.out[u]) {
        auto& row = adj[static_cast<std::size_t>(v)];
        if (std::find(row.begin(), row.end(), static_cast<Vertex>(u)) == row.end())
          row.push_back(static_cast<Vertex>(u));
      }
  return adj;
}

std::vector<int> plain_bfs(const std::vector<std::vector<Vertex>>& adj, Vertex root) {
  std::vector<int> dist(adj.size(), -1);
  std::vector<Vertex> frontier{root};
  dist[static_cast<std::size_t>(root)] = 0;
  int d = 0;
  while (!frontier.empty()) {
    std::vector<Vertex> next;
    ++d;
    for (const Vertex u : frontier)
      for (const Vertex v : adj[static_cast<std::size_t>(u)])
        if (dist[static_cast<std::size_t>(v)] < 0) {
          dist[static_cast<std::size_t>(v)] = d;
          next.push_back(v);
        }
    frontier = std::move(next);
  }
  return dist;
}

}  // namespace

int brute_diameter(const GameGraph& g, Mode mode) {
  const auto adj = closure_adjacency(g, mode);
  int best = 0;
  for (std::size_t v = 0; v < adj.size(); ++v)
    for (const int d : plain_bfs(adj, static_cast<Vertex>(v)))
      if (d > best) best = d;
  return best;
}

int brute_god_to_win(const GameGraph& g) {
  int best = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const auto dist = plain_bfs(g.out, static_cast<Vertex>(v));
    int here = -1;
    for (std::size_t t = 0; t < g.vertex_count(); ++t)
      if (g.win[t] && dist[t] >= 0 && (here < 0 || dist[t] < here)) here = dist[t];
    if (here > best) best = here;
  }
  return best;
}

namespace {

// Key: visited mask in the high bits, current vertex in the low five.
using MemoKey = std::uint64_t;

struct GameSearch {
  const GameGraph& g;
  std::unordered_map<MemoKey, GameValue> memo;

  GameValue value(Vertex v, std::uint32_t visited) {
    const MemoKey key = (static_cast<MemoKey>(visited) << 5) | static_cast<MemoKey>(v);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;

    const int mover = g.owner[static_cast<std::size_t>(v)];
    GameValue best;
    if (g.terminal[static_cast<std::size_t>(v)]) {
      if (g.win[static_cast<std::size_t>(v)])
        best = {mover == 0 ? Verdict::WIN_P1 : Verdict::WIN_P0, 0};
      else
        best = {Verdict::DRAW, -1};
    } else {
      const Verdict mover_wins = mover == 0 ? Verdict::WIN_P0 : Verdict::WIN_P1;
      bool first = true;
      for (const Vertex s : g.out[static_cast<std::size_t>(v)]) {
        GameValue r;
        if ((visited >> s) & 1u)
          r = {Verdict::DRAW, -1};
        else
          r = value(s, visited | (1u << s));
        if (r.value != Verdict::DRAW) ++r.dtm;
        // Mover preference: own win (fewest moves), then draw, then the
        // longest loss.
        auto rank = [&](const GameValue& x) {
          return x.value == mover_wins ? 2 : x.value == Verdict::DRAW ? 1 : 0;
        };
        const bool better =
            first || rank(r) > rank(best) ||
            (rank(r) == rank(best) && rank(r) == 2 && r.dtm < best.dtm) ||
            (rank(r) == rank(best) && rank(r) == 0 && r.dtm > best.dtm);
        if (better) best = r;
        first = false;
      }
    }
    memo.emplace(key, best);
    return best;
  }
};

}  // namespace

GameValue brute_game_value(const GameGraph& g) {
  if (g.players != 2) throw SpecError("history minimax needs a two-player graph");
  if (g.vertex_count() > 25) throw SpecError("history minimax is limited to 25 vertices");
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.owner[v] != 0 && g.owner[v] != 1) throw SpecError("history minimax needs owners 0/1");
  GameSearch search{g, {}};
  return search.value(g.start, 1u << g.start);
}

std::uint64_t frame_stewart(int pegs, int disks) {
  if (pegs < 3) throw SpecError("frame-stewart needs at least 3 pegs");
  if (disks < 0 || disks > 62) throw SpecError("frame-stewart disk count out of range");
  static std::map<std::pair<int, int>, std::uint64_t> memo;
  const auto key = std::make_pair(pegs, disks);
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;
  std::uint64_t r;
  if (disks <= 1) r = static_cast<std::uint64_t>(disks);
  else if (pegs == 3) r = (1ull << disks) - 1;
  else {
    r = ~0ull;
    for (int k = 1; k < disks; ++k)
      r = std::min(r, 2 * frame_stewart(pegs, k) + frame_stewart(pegs - 1, disks - k));
  }
  memo.emplace(key, r);
  return r;
}

bool nim_first_player_wins(const std::vector<int>& piles, bool misere) {
  int x = 0, big = 0, nonempty = 0;
  for (const int p : piles) {
    x ^= p;
    if (p > 1) ++big;
    if (p > 0) ++nonempty;
  }
  if (misere && big == 0) return nonempty % 2 == 0;
  return x != 0;
}

std::optional<std::vector<Vertex>> hamiltonian_path(const GameGraph& g, std::uint64_t budget) {
  const auto adj = closure_adjacency(g, Mode::undirected);
  const std::size_t n = adj.size();
  if (n == 0) return std::vector<Vertex>{};
  std::vector<char> used(n, 0);
  std::vector<Vertex> path;
  std::uint64_t steps = 0;
  std::vector<Vertex> queue;
  std::vector<char> seen(n, 0);

  // Every unused vertex must stay reachable from the path head, otherwise no
  // extension can cover it.  This prune never discards a completable branch.
  const auto rest_reachable = [&](Vertex head) -> bool {
    const std::size_t left = n - path.size();
    std::fill(seen.begin(), seen.end(), 0);
    queue.clear();
    std::size_t got = 0;
    for (const Vertex s : adj[static_cast<std::size_t>(head)])
      if (!used[static_cast<std::size_t>(s)] && !seen[static_cast<std::size_t>(s)]) {
        seen[static_cast<std::size_t>(s)] = 1;
        ++got;
        queue.push_back(s);
      }
    for (std::size_t i = 0; i < queue.size() && got < left; ++i)
      for (const Vertex t : adj[static_cast<std::size_t>(queue[i])])
        if (!used[static_cast<std::size_t>(t)] && !seen[static_cast<std::size_t>(t)]) {
          seen[static_cast<std::size_t>(t)] = 1;
          ++got;
          queue.push_back(t);
        }
    return got == left;
  };

  std::function<bool(Vertex)> extend = [&](Vertex v) -> bool {
    if (++steps > budget) return false;
    used[static_cast<std::size_t>(v)] = 1;
    path.push_back(v);
    if (path.size() == n) return true;
    if (rest_reachable(v)) {
      // Fewest onward choices first.
      std::vector<std::pair<int, Vertex>> cand;
      for (const Vertex s : adj[static_cast<std::size_t>(v)]) {
        if (used[static_cast<std::size_t>(s)]) continue;
        int onward = 0;
        for (const Vertex t : adj[static_cast<std::size_t>(s)])
          if (!used[static_cast<std::size_t>(t)]) ++onward;
        cand.emplace_back(onward, s);
      }
      std::sort(cand.begin(), cand.end());
      for (const auto& [onward, s] : cand)
        if (extend(s)) return true;
    }
    used[static_cast<std::size_t>(v)] = 0;
    path.pop_back();
    return false;
  };

  for (std::size_t start = 0; start < n && steps < budget; ++start) {
    path.clear();
    std::fill(used.begin(), used.end(), 0);
    if (extend(static_cast<Vertex>(start))) return path;
  }
  return std::nullopt;
}

std::vector<int> dihedral_orbit_sizes(const std::vector<std::string>& arrangements) {
  std::map<std::string, std::set<std::string>> orbits;
  for (const std::string& s : arrangements) {
    std::set<std::string> orbit;
    std::string t = s;
    for (int flip = 0; flip < 2; ++flip) {
      for (std::size_t r = 0; r < t.size(); ++r) {
        orbit.insert(t);
        std::rotate(t.begin(), t.begin() + 1, t.end());
      }
      std::reverse(t.begin(), t.end());
    }
    orbits[*orbit.begin()] = std::move(orbit);
  }
  std::vector<int> sizes;
  for (const auto& [canon, orbit] : orbits) sizes.push_back(static_cast<int>(orbit.size()));
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

std::vector<HostGraph> connected_hosts_up_to_iso(int n) {
  if (n < 1 || n > 6) throw SpecError("host enumeration is limited to 6 vertices");
  std::vector<std::pair<int, int>> all_edges;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) all_edges.emplace_back(a, b);
  const int m = static_cast<int>(all_edges.size());

  std::vector<int> plist(static_cast<std::size_t>(n));
  std::iota(plist.begin(), plist.end(), 0);
  std::vector<std::vector<int>> perms;
  do perms.push_back(plist);
  while (std::next_permutation(plist.begin(), plist.end()));

  auto edge_bit = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    for (int i = 0; i < m; ++i)
      if (all_edges[static_cast<std::size_t>(i)] == std::make_pair(a, b)) return i;
    return -1;
  };

  std::set<std::uint32_t> seen;
  std::vector<HostGraph> hosts;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    // Connectivity.
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1u) {
        adj[static_cast<std::size_t>(all_edges[static_cast<std::size_t>(i)].first)]
            .push_back(all_edges[static_cast<std::size_t>(i)].second);
        adj[static_cast<std::size_t>(all_edges[static_cast<std::size_t>(i)].second)]
            .push_back(all_edges[static_cast<std::size_t>(i)].first);
      }
    std::vector<char> vis(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    vis[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (const int v : adj[static_cast<std::size_t>(u)])
        if (!vis[static_cast<std::size_t>(v)]) {
          vis[static_cast<std::size_t>(v)] = 1;
          ++count;
          stack.push_back(v);
        }
    }
    if (count != n) continue;

    std::uint32_t canon = ~0u;
    for (const auto& p : perms) {
      std::uint32_t relab = 0;
      for (int i = 0; i < m; ++i)
        if ((mask >> i) & 1u)
          relab |= 1u << edge_bit(p[static_cast<std::size_t>(all_edges[static_cast<std::size_t>(i)].first)],
                                  p[static_cast<std::size_t>(all_edges[static_cast<std::size_t>(i)].second)]);
      canon = std::min(canon, relab);
    }
    if (!seen.insert(canon).second) continue;

    HostGraph h;
    h.n = n;
    h.name = "iso" + std::to_string(n) + "-" + std::to_string(hosts.size());
    for (int i = 0; i < m; ++i)
      if ((canon >> i) & 1u) h.edges.push_back(all_edges[static_cast<std::size_t>(i)]);
    hosts.push_back(std::move(h));
  }
  return hosts;
}

}  // namespace godgraph::oracle
