#include "doctest.h"

#include "godgraph/families.hpp"
#include "godgraph/graph_io.hpp"
#include "godgraph/hosts.hpp"
#include "godgraph/util.hpp"

using namespace godgraph;

namespace {

GameGraph sample_game() {
  GameGraph g;
  g.players = 2;
  g.add_vertex(0, "root");
  g.add_vertex(1, "reply");
  g.add_vertex(0, "end");
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.set_win(2);
  g.start = 0;
  g.freeze();
  return g;
}

}  // namespace

TEST_CASE("json round trip preserves everything") {
  const GameGraph g = sample_game();
  const std::string text = graph_to_json(g);
  const GameGraph h = graph_from_json(text);
  CHECK(h.players == 2);
  CHECK(h.start == 0);
  CHECK(h.vertex_count() == 3);
  CHECK(h.arc_count() == 2);
  CHECK(h.owner == g.owner);
  CHECK(h.win == g.win);
  CHECK(h.terminal == g.terminal);
  CHECK(h.label == g.label);
  CHECK(graph_to_json(h) == text);
}

TEST_CASE("round trip of a generated solitaire graph") {
  const GameGraph g = gen_sliding(host_grid(2, 2));
  const GameGraph h = graph_from_json(graph_to_json(g));
  CHECK(h.vertex_count() == g.vertex_count());
  CHECK(h.arc_count() == g.arc_count());
  CHECK(h.win == g.win);
  CHECK(graph_to_json(h) == graph_to_json(g));
}

TEST_CASE("dot marks win vertices") {
  const std::string dot = graph_to_dot(sample_game());
  CHECK(dot.find("doublecircle") != std::string::npos);
  CHECK(dot.find("->") != std::string::npos);
}

TEST_CASE("csv lists one arc per line") {
  const std::string csv = graph_to_csv_edges(sample_game());
  CHECK(csv == "0,1\n1,2\n");
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS_AS(graph_from_json("{"), SpecError);
  CHECK_THROWS_AS(graph_from_json(R"({"vertices": []})"), SpecError);
  // Edge endpoint out of range.
  CHECK_THROWS_AS(
      graph_from_json(
          R"({"start":0,"players":0,"vertices":[{"id":0,"owner":-1,"terminal":true,"win":false}],"edges":[[0,5]]})"),
      SpecError);
}

TEST_CASE("alternation graphs need their win vertices to be sinks") {
  // win on a vertex with moves: fine for solitaire, rejected for two players.
  const char* base =
      R"({"start":0,"players":%d,"vertices":[{"id":0,"owner":%d,"terminal":false,"win":true},{"id":1,"owner":%d,"terminal":true,"win":false}],"edges":[[0,1]]})";
  char solo[512], duo[512];
  std::snprintf(solo, sizeof solo, base, 0, -1, -1);
  std::snprintf(duo, sizeof duo, base, 2, 0, 1);
  CHECK_NOTHROW(graph_from_json(solo));
  CHECK_THROWS_AS(graph_from_json(duo), SpecError);
}

TEST_CASE("export format names") {
  CHECK(parse_export_format("json") == ExportFormat::json);
  CHECK(parse_export_format("dot") == ExportFormat::dot);
  CHECK(parse_export_format("csv") == ExportFormat::csv_edges);
  CHECK_THROWS_AS(parse_export_format("yaml"), SpecError);
}
