#include "godgraph/graph.hpp"

#include <algorithm>
#include <cassert>
#include <queue>

namespace godgraph {

Vertex StateInterner::intern(std::string_view bytes) {
  auto it = ids_.find(bytes);
  if (it != ids_.end()) return it->second;
  keys_.emplace_back(bytes);
  const Vertex id = static_cast<Vertex>(keys_.size() - 1);
  ids_.emplace(std::string_view(keys_.back()), id);
  return id;
}

std::optional<Vertex> StateInterner::lookup(std::string_view bytes) const {
  auto it = ids_.find(bytes);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

Vertex GameGraph::add_vertex(int owner_value, std::string label_bytes) {
  out.emplace_back();
  owner.push_back(static_cast<std::int16_t>(owner_value));
  win.push_back(0);
  terminal.push_back(0);
  if (!label_bytes.empty() || !label.empty()) {
    label.resize(out.size());
    label.back() = std::move(label_bytes);
  }
  frozen = false;
  return static_cast<Vertex>(out.size() - 1);
}

void GameGraph::add_edge(Vertex u, Vertex v) {
  assert(u != v);
  assert(u >= 0 && static_cast<std::size_t>(u) < out.size());
  assert(v >= 0 && static_cast<std::size_t>(v) < out.size());
  auto& row = out[static_cast<std::size_t>(u)];
  if (std::find(row.begin(), row.end(), v) != row.end()) return;
  row.push_back(v);
  frozen = false;
}

void GameGraph::add_undirected_edge(Vertex u, Vertex v) {
  add_edge(u, v);
  add_edge(v, u);
}

void GameGraph::set_win(Vertex v, bool value) {
  win[static_cast<std::size_t>(v)] = value ? 1 : 0;
}

void GameGraph::freeze() {
  for (std::size_t v = 0; v < out.size(); ++v) terminal[v] = out[v].empty() ? 1 : 0;
  frozen = true;
}

std::size_t GameGraph::arc_count() const {
  std::size_t n = 0;
  for (const auto& row : out) n += row.size();
  return n;
}

std::vector<Vertex> GameGraph::win_vertices() const {
  std::vector<Vertex> w;
  for (std::size_t v = 0; v < win.size(); ++v)
    if (win[v]) w.push_back(static_cast<Vertex>(v));
  return w;
}

AdjacencyView::AdjacencyView(const GameGraph& g, Mode mode) {
  if (mode == Mode::forward || g.arcs_symmetric) {
    adj_ = &g.out;
    return;
  }
  storage_ = g.out;
  for (std::size_t u = 0; u < g.out.size(); ++u)
    for (const Vertex v : g.out[u]) {
      auto& row = storage_[static_cast<std::size_t>(v)];
      if (std::find(row.begin(), row.end(), static_cast<Vertex>(u)) == row.end())
        row.push_back(static_cast<Vertex>(u));
    }
  adj_ = &storage_;
}

BfsResult bfs_adj(const std::vector<std::vector<Vertex>>& adj, Vertex root) {
  BfsResult r;
  r.dist.assign(adj.size(), -1);
  r.dist[static_cast<std::size_t>(root)] = 0;
  std::vector<Vertex> frontier{root};
  r.profile.push_back(1);
  std::int32_t depth = 0;
  while (!frontier.empty()) {
    std::vector<Vertex> next;
    ++depth;
    for (const Vertex u : frontier)
      for (const Vertex v : adj[static_cast<std::size_t>(u)])
        if (r.dist[static_cast<std::size_t>(v)] < 0) {
          r.dist[static_cast<std::size_t>(v)] = depth;
          next.push_back(v);
        }
    if (!next.empty()) r.profile.push_back(static_cast<std::int64_t>(next.size()));
    frontier = std::move(next);
  }
  return r;
}

namespace {

// BFS over a view without materializing a second adjacency copy.
BfsResult bfs_view(const AdjacencyView& adj, Vertex root) {
  BfsResult r;
  r.dist.assign(adj.size(), -1);
  r.dist[static_cast<std::size_t>(root)] = 0;
  std::vector<Vertex> frontier{root};
  r.profile.push_back(1);
  std::int32_t depth = 0;
  while (!frontier.empty()) {
    std::vector<Vertex> next;
    ++depth;
    for (const Vertex u : frontier)
      for (const Vertex v : adj[u])
        if (r.dist[static_cast<std::size_t>(v)] < 0) {
          r.dist[static_cast<std::size_t>(v)] = depth;
          next.push_back(v);
        }
    if (!next.empty()) r.profile.push_back(static_cast<std::int64_t>(next.size()));
    frontier = std::move(next);
  }
  return r;
}

int ecc_from(const AdjacencyView& adj, Vertex v) {
  const BfsResult r = bfs_view(adj, v);
  return static_cast<int>(r.profile.size()) - 1;
}

}  // namespace

BfsResult bfs(const GameGraph& g, Vertex root, Mode mode) {
  const AdjacencyView adj(g, mode);
  return bfs_view(adj, root);
}

std::vector<std::int32_t> distances_to_set(const GameGraph& g, const std::vector<Vertex>& targets,
                                           Mode mode) {
  // Reverse arcs: dist[v] = shortest forward path v -> targets.
  std::vector<std::vector<Vertex>> rev(g.vertex_count());
  for (std::size_t u = 0; u < g.out.size(); ++u)
    for (const Vertex v : g.out[u]) rev[static_cast<std::size_t>(v)].push_back(static_cast<Vertex>(u));
  if (mode == Mode::undirected) {
    for (std::size_t u = 0; u < g.out.size(); ++u)
      for (const Vertex v : g.out[u]) {
        auto& row = rev[u];
        if (std::find(row.begin(), row.end(), v) == row.end()) row.push_back(v);
      }
  }
  std::vector<std::int32_t> dist(g.vertex_count(), -1);
  std::queue<Vertex> q;
  for (const Vertex t : targets)
    if (dist[static_cast<std::size_t>(t)] < 0) {
      dist[static_cast<std::size_t>(t)] = 0;
      q.push(t);
    }
  while (!q.empty()) {
    const Vertex u = q.front();
    q.pop();
    for (const Vertex v : rev[static_cast<std::size_t>(u)])
      if (dist[static_cast<std::size_t>(v)] < 0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
        q.push(v);
      }
  }
  return dist;
}

int eccentricity(const GameGraph& g, Vertex v, Mode mode) {
  const AdjacencyView adj(g, mode);
  return ecc_from(adj, v);
}

std::vector<std::vector<Vertex>> components(const GameGraph& g) {
  const AdjacencyView adj(g, Mode::undirected);
  std::vector<char> seen(g.vertex_count(), 0);
  std::vector<std::vector<Vertex>> comps;
  for (std::size_t s = 0; s < g.vertex_count(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{static_cast<Vertex>(s)};
    seen[s] = 1;
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (const Vertex v : adj[comp[i]])
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          comp.push_back(v);
        }
    std::sort(comp.begin(), comp.end());
    comps.push_back(std::move(comp));
  }
  return comps;  // discovery from ascending ids orders by smallest member
}

ComponentDiameters component_diameters(const GameGraph& g) {
  const AdjacencyView adj(g, Mode::undirected);
  ComponentDiameters r;
  r.comps = components(g);
  for (const auto& comp : r.comps) {
    int best = 0;
    if (g.vertex_transitive_hint) {
      best = ecc_from(adj, comp.front());
    } else {
      for (const Vertex v : comp) best = std::max(best, ecc_from(adj, v));
    }
    r.diameter.push_back(best);
  }
  return r;
}

int diameter(const GameGraph& g, Mode mode) {
  const AdjacencyView adj(g, mode);
  if (g.vertex_transitive_hint) {
    // Cayley-type graphs are vertex-transitive within a component, so any
    // root's eccentricity is the component diameter.
    int best = 0;
    for (const auto& comp : components(g)) best = std::max(best, ecc_from(adj, comp.front()));
    return best;
  }
  int best = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    best = std::max(best, ecc_from(adj, static_cast<Vertex>(v)));
  return best;
}

int girth(const GameGraph& g) {
  // Undirected closure with deduplicated neighbor sets.
  std::vector<std::vector<Vertex>> adj(g.vertex_count());
  for (std::size_t u = 0; u < g.out.size(); ++u)
    for (const Vertex v : g.out[u]) {
      auto& a = adj[u];
      if (std::find(a.begin(), a.end(), v) == a.end()) a.push_back(v);
      auto& b = adj[static_cast<std::size_t>(v)];
      if (std::find(b.begin(), b.end(), static_cast<Vertex>(u)) == b.end())
        b.push_back(static_cast<Vertex>(u));
    }

  int best = 0;  // 0 = no cycle found yet
  const std::size_t n = g.vertex_count();
  std::vector<std::int32_t> dist(n);
  std::vector<Vertex> parent(n);
  // Stamps avoid reinitializing dist for every source.
  std::vector<std::int32_t> stamp(n, -1);
  // On a vertex-transitive graph some shortest cycle passes through every
  // vertex, so one source is enough.
  const std::size_t sources = g.vertex_transitive_hint ? std::min<std::size_t>(1, n) : n;
  for (std::size_t s = 0; s < sources; ++s) {
    // BFS from s, stopping once depth cannot improve on `best`.
    dist[s] = 0;
    stamp[s] = static_cast<std::int32_t>(s);
    parent[s] = -1;
    std::queue<Vertex> q;
    q.push(static_cast<Vertex>(s));
    while (!q.empty()) {
      const Vertex u = q.front();
      q.pop();
      if (best > 0 && 2 * dist[static_cast<std::size_t>(u)] >= best) continue;
      for (const Vertex v : adj[static_cast<std::size_t>(u)]) {
        if (v == parent[static_cast<std::size_t>(u)]) continue;
        if (stamp[static_cast<std::size_t>(v)] != static_cast<std::int32_t>(s)) {
          stamp[static_cast<std::size_t>(v)] = static_cast<std::int32_t>(s);
          dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + 1;
          parent[static_cast<std::size_t>(v)] = u;
          q.push(v);
        } else {
          // Cycle through s of length <= d(u) + d(v) + 1.
          const int len = dist[static_cast<std::size_t>(u)] + dist[static_cast<std::size_t>(v)] + 1;
          if (len >= 3 && (best == 0 || len < best)) best = len;
        }
      }
    }
    if (best == 3) break;
  }
  return best;
}

}  // namespace godgraph
