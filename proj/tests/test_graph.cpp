#include "doctest.h"

#include "godgraph/graph.hpp"

using namespace godgraph;

namespace {

GameGraph directed_cycle(int n) {
  GameGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(kSolitaire);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  g.freeze();
  return g;
}

GameGraph undirected_path(int n) {
  GameGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(kSolitaire);
  for (int i = 0; i + 1 < n; ++i) g.add_undirected_edge(i, i + 1);
  g.freeze();
  return g;
}

}  // namespace

TEST_CASE("bfs distances and profile on a path") {
  const GameGraph g = undirected_path(5);
  const BfsResult r = bfs(g, 0, Mode::forward);
  CHECK(r.dist == std::vector<std::int32_t>{0, 1, 2, 3, 4});
  CHECK(r.profile == std::vector<std::int64_t>{1, 1, 1, 1, 1});
  CHECK(eccentricity(g, 2, Mode::forward) == 2);
}

TEST_CASE("forward and undirected modes differ on a directed cycle") {
  const GameGraph g = directed_cycle(6);
  CHECK(diameter(g, Mode::forward) == 5);
  CHECK(diameter(g, Mode::undirected) == 3);
  const BfsResult fwd = bfs(g, 0, Mode::forward);
  CHECK(fwd.dist[5] == 5);
  const BfsResult both = bfs(g, 0, Mode::undirected);
  CHECK(both.dist[5] == 1);
}

TEST_CASE("unreached vertices carry distance -1") {
  GameGraph g;
  for (int i = 0; i < 4; ++i) g.add_vertex(kSolitaire);
  g.add_edge(0, 1);
  g.add_edge(2, 3);
  g.freeze();
  const BfsResult r = bfs(g, 0, Mode::forward);
  CHECK(r.dist[1] == 1);
  CHECK(r.dist[2] == -1);
  CHECK(r.dist[3] == -1);
}

TEST_CASE("duplicate edges are dropped") {
  GameGraph g;
  g.add_vertex(kSolitaire);
  g.add_vertex(kSolitaire);
  g.add_edge(0, 1);
  g.add_edge(0, 1);
  g.freeze();
  CHECK(g.arc_count() == 1);
}

TEST_CASE("components are maximal undirected pieces") {
  GameGraph g;
  for (int i = 0; i < 6; ++i) g.add_vertex(kSolitaire);
  g.add_edge(0, 1);
  g.add_edge(1, 2);  // directed arcs still glue components
  g.add_undirected_edge(3, 4);
  g.freeze();
  const auto comps = components(g);
  REQUIRE(comps.size() == 3);
  CHECK(comps[0] == std::vector<Vertex>{0, 1, 2});
  CHECK(comps[1] == std::vector<Vertex>{3, 4});
  CHECK(comps[2] == std::vector<Vertex>{5});
  const ComponentDiameters cd = component_diameters(g);
  CHECK(cd.diameter == std::vector<int>{2, 1, 0});
}

TEST_CASE("multi-source distances") {
  const GameGraph g = undirected_path(7);
  const auto dist = distances_to_set(g, {0, 6}, Mode::forward);
  CHECK(dist == std::vector<std::int32_t>{0, 1, 2, 3, 2, 1, 0});
}

TEST_CASE("girth") {
  CHECK(girth(undirected_path(5)) == 0);
  CHECK(girth(directed_cycle(5)) == 5);
  GameGraph k4;
  for (int i = 0; i < 4; ++i) k4.add_vertex(kSolitaire);
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) k4.add_undirected_edge(i, j);
  k4.freeze();
  CHECK(girth(k4) == 3);

  // A pair of opposite arcs is one undirected edge, not a 2-cycle.
  GameGraph two;
  two.add_vertex(kSolitaire);
  two.add_vertex(kSolitaire);
  two.add_edge(0, 1);
  two.add_edge(1, 0);
  two.freeze();
  CHECK(girth(two) == 0);
}

TEST_CASE("girth finds the short cycle far from vertex 0") {
  // A long tail from 0 ending in a triangle.
  GameGraph g;
  for (int i = 0; i < 9; ++i) g.add_vertex(kSolitaire);
  for (int i = 0; i + 1 < 7; ++i) g.add_undirected_edge(i, i + 1);
  g.add_undirected_edge(6, 7);
  g.add_undirected_edge(7, 8);
  g.add_undirected_edge(8, 6);
  g.freeze();
  CHECK(girth(g) == 3);
}

TEST_CASE("state interner") {
  StateInterner in;
  const Vertex a = in.intern("alpha");
  const Vertex b = in.intern("beta");
  CHECK(a != b);
  CHECK(in.intern("alpha") == a);
  CHECK(in.size() == 2);
  CHECK(in.key(a) == "alpha");
  CHECK(in.lookup("beta") == std::optional<Vertex>(b));
  CHECK(!in.lookup("gamma").has_value());
}

TEST_CASE("win flags and terminals") {
  GameGraph g;
  g.players = 2;
  g.add_vertex(0);
  g.add_vertex(1);
  g.add_edge(0, 1);
  g.set_win(1);
  g.freeze();
  CHECK(g.terminal[0] == 0);
  CHECK(g.terminal[1] == 1);
  CHECK(g.win_vertices() == std::vector<Vertex>{1});
}
