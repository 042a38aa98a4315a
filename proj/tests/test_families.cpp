#include "doctest.h"

#include <algorithm>

#include "godgraph/chess.hpp"
#include "godgraph/families.hpp"
#include "godgraph/graph_io.hpp"
#include "godgraph/hosts.hpp"
#include "godgraph/solitaire.hpp"
#include "godgraph/solver.hpp"
#include "godgraph/util.hpp"

using namespace godgraph;

TEST_CASE("transposition game on a 3-path") {
  const GameGraph g = gen_transposition(host_path(3));
  CHECK(g.vertex_count() == 6);
  CHECK(g.arcs_symmetric);
  CHECK(g.vertex_transitive_hint);
  // Identity has rank 0 and is the start.
  CHECK(g.start == 0);
  CHECK(g.label[0] == "1 2 3");
  // Stones on a path swap only across the two host edges.
  CHECK(g.out[0].size() == 2);
  CHECK(god_of_graph(g) == 3);
  CHECK(girth(g) == 6);  // the graph is a hexagon
}

TEST_CASE("transposition game on a triangle") {
  const GameGraph g = gen_transposition(host_complete(3));
  CHECK(g.vertex_count() == 6);
  CHECK(god_of_graph(g) == 2);
  for (std::size_t v = 0; v < 6; ++v) CHECK(g.out[v].size() == 3);
}

TEST_CASE("sliding game on the 2x2 grid") {
  const GameGraph g = gen_sliding(host_grid(2, 2));
  CHECK(g.vertex_count() == 24);
  CHECK(g.win_vertices() == std::vector<Vertex>{0});
  // Only hole moves: two host edges touch the hole's square.
  CHECK(g.out[0].size() == 2);
  const SolitaireResult r = solve_solitaire(g);
  CHECK(r.solvable);
  CHECK(r.god == std::optional<int>(0));  // start is the solved state
  CHECK(r.witness == std::vector<Vertex>{0});
}

TEST_CASE("sliding witness is a real play") {
  GameGraph g = gen_sliding(host_grid(3, 2));
  // Re-root the search at some scrambled state in the solved component.
  const BfsResult b = bfs(g, 0, Mode::forward);
  Vertex far = 0;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (b.dist[v] > b.dist[static_cast<std::size_t>(far)]) far = static_cast<Vertex>(v);
  g.start = far;
  const SolitaireResult r = solve_solitaire(g);
  REQUIRE(r.solvable);
  CHECK(r.god == std::optional<int>(21));
  REQUIRE(r.witness.size() == 22);
  CHECK(r.witness.front() == far);
  CHECK(g.win[static_cast<std::size_t>(r.witness.back())] == 1);
  for (std::size_t i = 0; i + 1 < r.witness.size(); ++i) {
    const auto& row = g.out[static_cast<std::size_t>(r.witness[i])];
    CHECK(std::find(row.begin(), row.end(), r.witness[i + 1]) != row.end());
  }
}

TEST_CASE("cyclic group of order five") {
  const GameGraph g = generate_from_spec("cayley:zn:5:1");
  CHECK(g.vertex_count() == 5);
  CHECK(g.arc_count() == 10);  // +1 and its inverse
  CHECK(diameter(g, Mode::forward) == 2);
  CHECK(girth(g) == 5);
}

TEST_CASE("tower with two disks on three pegs") {
  const GameGraph g = gen_hanoi({3, 2});
  CHECK(g.vertex_count() == 9);
  CHECK(g.arc_count() == 24);
  CHECK(g.start == 0);
  CHECK(g.win_vertices() == std::vector<Vertex>{8});
  const SolitaireResult r = solve_solitaire(g);
  CHECK(r.solvable);
  CHECK(r.god == std::optional<int>(3));
  CHECK(diameter(g, Mode::forward) == 3);
}

TEST_CASE("peg jumps on a 1x3 strip") {
  const GameGraph g = gen_peg({3, 1, {}});
  CHECK(g.vertex_count() == 8);
  CHECK(g.start == 7);
  // Full board: no empty landing square, no moves.
  CHECK(g.out[7].empty());
  // Two pegs with the right gap jump to a singleton.
  CHECK(g.out[3] == std::vector<Vertex>{4});  // 110 -> 001
  CHECK(g.out[6] == std::vector<Vertex>{1});  // 011 -> 100
  CHECK(g.win[1] == 1);
  CHECK(g.win[4] == 1);
  CHECK(g.win[7] == 0);
}

TEST_CASE("line game graphs alternate owners and end at wins") {
  const GameGraph g = gen_mnk({3, 3, 2});
  CHECK(g.players == 2);
  CHECK(g.owner[static_cast<std::size_t>(g.start)] == 0);
  for (std::size_t u = 0; u < g.vertex_count(); ++u) {
    if (g.win[u]) CHECK(g.terminal[u] == 1);
    for (const Vertex v : g.out[u]) CHECK(g.owner[u] != g.owner[static_cast<std::size_t>(v)]);
  }
  // With a 2-line to win, the first player wins on move 2 at the latest:
  // no drawn positions survive past depth 3.
  const SolveResult s = solve_retrograde(g);
  CHECK(s.start_verdict == Verdict::WIN_P0);
  CHECK(s.god == std::optional<int>(2));
}

TEST_CASE("misere piles flip the endgame") {
  // Normal play: taking the last stone wins.
  NimSpec normal{{1}, false};
  const SolveResult sn = solve_retrograde(gen_nim(normal));
  CHECK(sn.start_verdict == Verdict::WIN_P0);
  CHECK(sn.god == std::optional<int>(1));

  NimSpec mis{{1}, true};
  const SolveResult sm = solve_retrograde(gen_nim(mis));
  CHECK(sm.start_verdict == Verdict::WIN_P1);
  CHECK(sm.god == std::optional<int>(1));

  NimSpec mis2{{2}, true};
  const SolveResult s2 = solve_retrograde(gen_nim(mis2));
  CHECK(s2.start_verdict == Verdict::WIN_P0);
  CHECK(s2.god == std::optional<int>(2));
}

TEST_CASE("one-way card moves make a directed chain") {
  CardGameSpec spec;
  spec.cards = "211";
  spec.cyclic = false;
  spec.move = CardMove::adjacent_if_left_greater;
  const GameGraph g = gen_cardgame(spec);
  REQUIRE(g.vertex_count() == 3);
  CHECK(g.label[0] == "112");
  CHECK(g.label[1] == "121");
  CHECK(g.label[2] == "211");
  CHECK(g.out[2] == std::vector<Vertex>{1});
  CHECK(g.out[1] == std::vector<Vertex>{0});
  CHECK(g.out[0].empty());
  CHECK(!g.arcs_symmetric);
  CHECK(g.win[0] == 1);
}

TEST_CASE("any-pair moves on distinct cards touch every pair") {
  CardGameSpec spec;
  spec.cards = "23456T";
  spec.move = CardMove::any_pair;
  const GameGraph g = gen_cardgame(spec);
  CHECK(g.vertex_count() == 720);
  for (const auto& row : g.out) CHECK(row.size() == 15);
  CHECK(g.arcs_symmetric);
}

TEST_CASE("face card values order the target") {
  CHECK(card_value('9') == 9);
  CHECK(card_value('T') == 10);
  CHECK(card_value('J') == 11);
  CHECK(card_value('Q') == 12);
  CHECK(card_value('K') == 13);
  CHECK(card_value('A') == 14);
  CardGameSpec spec;
  spec.cards = "A2K";
  const GameGraph g = gen_cardgame(spec);
  bool found = false;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.win[v]) {
      CHECK(g.label[v] == "2KA");
      found = true;
    }
  CHECK(found);
}

TEST_CASE("spec strings reject nonsense") {
  CHECK_THROWS_AS(generate_from_spec("conway:life"), SpecError);
  CHECK_THROWS_AS(generate_from_spec("transposition:dodecahedron:5"), SpecError);
  CHECK_THROWS_AS(generate_from_spec("hanoi:2:3"), SpecError);
  CHECK_THROWS_AS(generate_from_spec("nim:"), SpecError);
  CHECK_THROWS_AS(generate_from_spec("card:XYZ:cyclic:any"), SpecError);
}

TEST_CASE("spec strings round trip the documented families") {
  CHECK(generate_from_spec("transposition:cycle:4").vertex_count() == 24);
  CHECK(generate_from_spec("sliding:grid:2x2").vertex_count() == 24);
  CHECK(generate_from_spec("hanoi:3:3").vertex_count() == 27);
  CHECK(generate_from_spec("peg:square:3x3").vertex_count() == 512);
  CHECK(generate_from_spec("mnk:2:2:2").players == 2);
  CHECK(generate_from_spec("nim:3,5").vertex_count() == 48);
  CHECK(generate_from_spec("card:QQKKAA:cyclic:any").vertex_count() == 90);
}

TEST_CASE("thread count never changes the output bytes") {
  GenOptions one;
  GenOptions four;
  four.threads = 4;
  const std::string a = graph_to_json(gen_mnk({3, 3, 3}, one));
  const std::string b = graph_to_json(gen_mnk({3, 3, 3}, four));
  CHECK(a == b);
  const std::string c = graph_to_json(gen_chess_graph(parse_board("2x4:kq/../../KQ w"), one));
  const std::string d = graph_to_json(gen_chess_graph(parse_board("2x4:kq/../../KQ w"), four));
  CHECK(c == d);
}
