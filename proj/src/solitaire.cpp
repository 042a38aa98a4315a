#include "godgraph/solitaire.hpp"

#include <algorithm>
#include <unordered_set>

namespace godgraph {

SolitaireResult solve_solitaire(const GameGraph& g) {
  SolitaireResult r;
  const BfsResult from_start = bfs(g, g.start, Mode::forward);
  r.profile = from_start.profile;

  const ComponentDiameters cd = component_diameters(g);
  r.component_diameters = cd.diameter;

  // Antipodal set: the deepest layer seen from the start.
  const int depth = static_cast<int>(from_start.profile.size()) - 1;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (from_start.dist[v] == depth) r.antipodal.push_back(static_cast<Vertex>(v));

  const std::vector<Vertex> wins = g.win_vertices();
  if (wins.empty()) return r;  // nothing to reach
  const std::vector<std::int32_t> to_win = distances_to_set(g, wins, Mode::forward);
  const std::int32_t d = to_win[static_cast<std::size_t>(g.start)];
  if (d < 0) return r;  // explicit UNSOLVABLE

  r.solvable = true;
  r.god = static_cast<int>(d);
  Vertex cur = g.start;
  r.witness.push_back(cur);
  while (to_win[static_cast<std::size_t>(cur)] > 0) {
    Vertex next = -1;
    for (const Vertex s : g.out[static_cast<std::size_t>(cur)]) {
      if (to_win[static_cast<std::size_t>(s)] != to_win[static_cast<std::size_t>(cur)] - 1) continue;
      if (next < 0 || s < next) next = s;
    }
    cur = next;
    r.witness.push_back(cur);
  }
  return r;
}

int god_of_graph(const GameGraph& g, Mode mode) { return diameter(g, mode); }

std::vector<Vertex> antipodal_set(const GameGraph& g, Vertex root, Mode mode) {
  const BfsResult r = bfs(g, root, mode);
  const int depth = static_cast<int>(r.profile.size()) - 1;
  std::vector<Vertex> far;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (r.dist[v] == depth) far.push_back(static_cast<Vertex>(v));
  return far;
}

ImplicitBfsResult implicit_bfs(const ImplicitGraph& g,
                               const std::function<bool(const std::string&)>& target,
                               const std::string& cap_spec_name) {
  ImplicitBfsResult r;
  std::unordered_set<std::string> visited;
  std::vector<std::string> frontier{g.start};
  visited.insert(g.start);
  r.profile.push_back(1);
  r.reached = 1;
  if (target && target(g.start)) {
    r.target_distance = 0;
    return r;
  }
  int depth = 0;
  while (!frontier.empty()) {
    std::vector<std::string> next;
    ++depth;
    for (const std::string& s : frontier) {
      for (std::string& t : g.successors(s)) {
        if (visited.count(t)) continue;
        check_cap(r.reached + 1, cap_spec_name);
        visited.insert(t);
        ++r.reached;
        if (target && target(t)) {
          r.target_distance = depth;
          r.eccentricity = depth;
          return r;  // profile keeps completed layers only
        }
        next.push_back(std::move(t));
      }
    }
    if (!next.empty()) {
      r.profile.push_back(static_cast<std::int64_t>(next.size()));
      r.eccentricity = depth;
    }
    frontier = std::move(next);
  }
  return r;
}

}  // namespace godgraph
