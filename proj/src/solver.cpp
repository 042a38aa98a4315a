#include "godgraph/solver.hpp"

#include <algorithm>
#include <cassert>
#include <deque>

namespace godgraph {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::WIN_P0: return "WIN_P0";
    case Verdict::WIN_P1: return "WIN_P1";
    case Verdict::DRAW: return "DRAW";
  }
  return "?";
}

int god_from_dtm(int dtm, int owner) {
  // Plies alternate starting with `owner`; count the P0 ones.
  if (owner == 0) return (dtm + 1) / 2;
  return dtm / 2;
}

SolveResult solve_retrograde(const GameGraph& g) {
  if (g.players != 2) throw SpecError("retrograde solver needs a two-player graph");
  const std::size_t n = g.vertex_count();
  for (std::size_t u = 0; u < n; ++u)
    for (const Vertex v : g.out[u])
      if (g.owner[u] == g.owner[static_cast<std::size_t>(v)])
        throw SpecError("two-player graph must alternate owners along every edge");

  SolveResult r;
  r.value.assign(n, Verdict::DRAW);
  r.dtm.assign(n, -1);
  std::vector<char> labeled(n, 0);
  std::vector<std::int32_t> pending(n, 0);
  for (std::size_t u = 0; u < n; ++u) pending[u] = static_cast<std::int32_t>(g.out[u].size());

  std::vector<std::vector<Vertex>> rev(n);
  for (std::size_t u = 0; u < n; ++u)
    for (const Vertex v : g.out[u]) rev[static_cast<std::size_t>(v)].push_back(static_cast<Vertex>(u));

  // Seed with win terminals; the mover into a terminal is its owner's opponent.
  std::deque<Vertex> queue;
  for (std::size_t v = 0; v < n; ++v) {
    if (!g.terminal[v] || !g.win[v]) continue;
    labeled[v] = 1;
    r.value[v] = (g.owner[v] == 0) ? Verdict::WIN_P1 : Verdict::WIN_P0;
    r.dtm[v] = 0;
    queue.push_back(static_cast<Vertex>(v));
  }

  // BFS order keeps dtm nondecreasing: first relaxation of a winner-owned
  // vertex is its minimum, the counter exhaustion of a loser-owned vertex
  // happens at its maximum.
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    const Verdict winner = r.value[static_cast<std::size_t>(v)];
    const int winner_id = (winner == Verdict::WIN_P0) ? 0 : 1;
    for (const Vertex u : rev[static_cast<std::size_t>(v)]) {
      const std::size_t ui = static_cast<std::size_t>(u);
      if (labeled[ui]) continue;
      if (g.owner[ui] == winner_id) {
        labeled[ui] = 1;
        r.value[ui] = winner;
        r.dtm[ui] = r.dtm[static_cast<std::size_t>(v)] + 1;
        queue.push_back(u);
      } else if (--pending[ui] == 0) {
        labeled[ui] = 1;
        r.value[ui] = winner;
        r.dtm[ui] = r.dtm[static_cast<std::size_t>(v)] + 1;
        queue.push_back(u);
      }
    }
  }

  for (std::size_t v = 0; v < n; ++v) {
    switch (r.value[v]) {
      case Verdict::WIN_P0: ++r.count_win_p0; break;
      case Verdict::WIN_P1: ++r.count_win_p1; break;
      case Verdict::DRAW: ++r.count_draw; break;
    }
  }
  const std::size_t s = static_cast<std::size_t>(g.start);
  r.start_verdict = r.value[s];
  if (r.start_verdict != Verdict::DRAW) {
    r.dtm_start = static_cast<int>(r.dtm[s]);
    r.god = god_from_dtm(r.dtm[s], g.owner[s]);
  }
  return r;
}

GameGraph extract_strategy(const GameGraph& g, const SolveResult& solved, int side,
                           StrategyKind kind) {
  if (side != 0 && side != 1) throw SpecError("strategy side must be 0 or 1");
  const Verdict own_win = (side == 0) ? Verdict::WIN_P0 : Verdict::WIN_P1;
  const Verdict opp_win = (side == 0) ? Verdict::WIN_P1 : Verdict::WIN_P0;
  const std::size_t sidx = static_cast<std::size_t>(g.start);
  if (kind == StrategyKind::win && solved.value[sidx] != own_win)
    throw SpecError("cannot extract a win strategy from a non-winning start");
  if (kind == StrategyKind::draw && solved.value[sidx] == opp_win)
    throw SpecError("cannot extract a draw strategy from a lost start");

  GameGraph h = g;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    if (g.owner[u] != side) continue;
    auto& row = h.out[u];
    if (kind == StrategyKind::win) {
      if (solved.value[u] != own_win) continue;  // unreachable under the strategy
      std::vector<Vertex> keep;
      for (const Vertex v : g.out[u])
        if (solved.value[static_cast<std::size_t>(v)] == own_win &&
            solved.dtm[static_cast<std::size_t>(v)] == solved.dtm[u] - 1)
          keep.push_back(v);
      row = std::move(keep);
    } else {
      if (solved.value[u] == opp_win) continue;  // already lost; nothing to protect
      std::vector<Vertex> keep;
      for (const Vertex v : g.out[u])
        if (solved.value[static_cast<std::size_t>(v)] != opp_win) keep.push_back(v);
      row = std::move(keep);
    }
  }
  h.arcs_symmetric = false;
  h.freeze();
  // Keep the original win markings; pruned vertices may have become sinks.
  for (std::size_t v = 0; v < g.vertex_count(); ++v) h.win[v] = g.win[v];
  return h;
}

namespace {

// Enumerates maximal simple paths; calls `leaf(end_vertex, p0_edges)`.
template <typename Leaf>
bool walk_paths(const GameGraph& h, Vertex u, std::vector<char>& on_path, int p0_edges,
                std::int64_t& paths, std::int64_t budget, const Leaf& leaf) {
  bool extended = false;
  const std::size_t ui = static_cast<std::size_t>(u);
  for (const Vertex v : h.out[ui]) {
    if (on_path[static_cast<std::size_t>(v)]) continue;
    extended = true;
    on_path[static_cast<std::size_t>(v)] = 1;
    const int add = (h.owner[ui] == 0) ? 1 : 0;
    if (!walk_paths(h, v, on_path, p0_edges + add, paths, budget, leaf)) return false;
    on_path[static_cast<std::size_t>(v)] = 0;
  }
  if (!extended) {
    if (++paths > budget) return false;
    leaf(u, p0_edges);
  }
  return true;
}

}  // namespace

StrategyCheck verify_strategy(const GameGraph& g, const GameGraph& strategy, int side,
                              StrategyKind kind, std::optional<int> claimed_god,
                              std::int64_t path_budget) {
  StrategyCheck out;
  if (strategy.vertex_count() != g.vertex_count()) {
    out.reason = "strategy must keep the vertex set";
    return out;
  }
  if (strategy.start != g.start) {
    out.reason = "strategy must keep the start";
    return out;
  }
  // Only side-owned edges may be removed, and none may be added.
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    for (const Vertex v : strategy.out[u]) {
      const auto& orig = g.out[u];
      if (std::find(orig.begin(), orig.end(), v) == orig.end()) {
        out.reason = "strategy adds an edge absent from the game";
        return out;
      }
    }
    if (g.owner[u] != side && strategy.out[u].size() != g.out[u].size()) {
      out.reason = "strategy removes an opponent edge";
      return out;
    }
  }

  // Reachable region under the strategy.
  std::vector<char> reach(g.vertex_count(), 0);
  std::vector<Vertex> stack{g.start};
  reach[static_cast<std::size_t>(g.start)] = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (const Vertex v : strategy.out[static_cast<std::size_t>(u)])
      if (!reach[static_cast<std::size_t>(v)]) {
        reach[static_cast<std::size_t>(v)] = 1;
        stack.push_back(v);
      }
  }
  std::int64_t reach_count = 0;
  for (const char c : reach) reach_count += c;

  const bool small = reach_count <= 24;
  if (small) {
    out.used_enumeration = true;
    std::vector<char> on_path(g.vertex_count(), 0);
    on_path[static_cast<std::size_t>(g.start)] = 1;
    bool good = true;
    std::string why;
    int max_p0 = -1;
    const auto leaf = [&](Vertex end, int p0_edges) {
      max_p0 = std::max(max_p0, p0_edges);
      const std::size_t e = static_cast<std::size_t>(end);
      const bool win_end = g.terminal[e] && g.win[e] && g.owner[e] != side;
      if (kind == StrategyKind::win) {
        if (!win_end && good) {
          good = false;
          why = "a maximal play ends outside the win set";
        }
      } else {
        const bool opp_win_end = g.terminal[e] && g.win[e] && g.owner[e] == side;
        if (opp_win_end && good) {
          good = false;
          why = "a maximal play ends in the opponent's win set";
        }
      }
    };
    if (!walk_paths(strategy, g.start, on_path, 0, out.paths, path_budget, leaf)) {
      out.reason = "path budget exceeded";
      return out;
    }
    out.max_first_player_edges = max_p0;
    if (!good) {
      out.reason = why;
      return out;
    }
    if (kind == StrategyKind::win && claimed_god && max_p0 != *claimed_god) {
      out.reason = "worst play uses " + std::to_string(max_p0) + " first-player moves, claimed " +
                   std::to_string(*claimed_god);
      return out;
    }
    out.ok = true;
    return out;
  }

  // Certificate route: recompute values on g and check local optimality of the
  // kept edges over the reachable region.
  const SolveResult solved = solve_retrograde(g);
  const Verdict own_win = (side == 0) ? Verdict::WIN_P0 : Verdict::WIN_P1;
  const Verdict opp_win = (side == 0) ? Verdict::WIN_P1 : Verdict::WIN_P0;
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    if (!reach[u]) continue;
    if (kind == StrategyKind::win) {
      if (solved.value[u] != own_win) {
        out.reason = "reachable vertex " + std::to_string(u) + " is not in the winning region";
        return out;
      }
      if (!g.terminal[u] && strategy.out[u].empty()) {
        out.reason = "strategy traps itself at vertex " + std::to_string(u);
        return out;
      }
      for (const Vertex v : strategy.out[u])
        if (solved.dtm[static_cast<std::size_t>(v)] >= solved.dtm[u]) {
          out.reason = "kept edge does not decrease dtm at vertex " + std::to_string(u);
          return out;
        }
    } else {
      if (solved.value[u] == opp_win) {
        out.reason = "reachable vertex " + std::to_string(u) + " is losing";
        return out;
      }
      if (g.owner[u] == static_cast<int>(side) && !g.terminal[u] && strategy.out[u].empty()) {
        out.reason = "strategy traps itself at vertex " + std::to_string(u);
        return out;
      }
    }
  }
  if (kind == StrategyKind::win && claimed_god) {
    const int expect = god_from_dtm(solved.dtm[static_cast<std::size_t>(g.start)],
                                    g.owner[static_cast<std::size_t>(g.start)]);
    if (expect != *claimed_god) {
      out.reason = "dtm certificate yields god " + std::to_string(expect) + ", claimed " +
                   std::to_string(*claimed_god);
      return out;
    }
    out.max_first_player_edges = expect;
  }
  out.ok = true;
  return out;
}

std::optional<int> draw_l_max(const GameGraph& g, std::int64_t path_budget) {
  std::vector<char> on_path(g.vertex_count(), 0);
  on_path[static_cast<std::size_t>(g.start)] = 1;
  std::int64_t paths = 0;
  int max_p0 = 0;
  const auto leaf = [&](Vertex, int p0_edges) { max_p0 = std::max(max_p0, p0_edges); };
  if (!walk_paths(g, g.start, on_path, 0, paths, path_budget, leaf)) return std::nullopt;
  return max_p0;
}

}  // namespace godgraph
