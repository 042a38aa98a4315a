#include "doctest.h"

#include "godgraph/coalition.hpp"
#include "godgraph/util.hpp"

using namespace godgraph;

namespace {

// Three players moving in rotation; the first mover picks the branch, and
// each branch ends paying a different opponent.
//   s(0) -> a(1) -> ta(2, pays 1)
//   s(0) -> b(1) -> c(2) -> tc(0, pays 2)
GameGraph pick_a_winner() {
  GameGraph g;
  g.players = 3;
  const Vertex s = g.add_vertex(0);
  const Vertex a = g.add_vertex(1);
  const Vertex ta = g.add_vertex(2);
  const Vertex b = g.add_vertex(1);
  const Vertex c = g.add_vertex(2);
  const Vertex tc = g.add_vertex(0);
  g.add_edge(s, a);
  g.add_edge(a, ta);
  g.add_edge(s, b);
  g.add_edge(b, c);
  g.add_edge(c, tc);
  g.set_win(ta);
  g.set_win(tc);
  g.start = s;
  g.freeze();
  return g;
}

}  // namespace

TEST_CASE("a win terminal pays the previous mover") {
  const GameGraph g = pick_a_winner();
  CHECK(terminal_payee(g, 2) == 1);  // owned by player 2
  CHECK(terminal_payee(g, 5) == 2);  // owned by player 0
  CHECK_THROWS_AS(terminal_payee(g, 0), SpecError);  // not a win terminal
}

TEST_CASE("the chooser is kingmaker, not winner") {
  const GameGraph g = pick_a_winner();
  const auto reports = winning_coalitions(g);
  REQUIRE(reports.size() == 7);
  for (const auto& rep : reports) {
    // No player wins alone. Any pair wins: with player 0 aboard the pair
    // steers into its own payout; the pair {1,2} collects either way.
    CHECK(rep.winning == (rep.members.size() >= 2));
    if (rep.members.size() == 2) {
      CHECK(rep.minimal);
      CHECK(rep.god == std::optional<int>(1));
    }
    if (rep.members.size() == 3) CHECK(!rep.minimal);
  }
}

TEST_CASE("two-player coalitions agree with the solver's verdict") {
  GameGraph g;
  g.players = 2;
  g.add_vertex(0);
  g.add_vertex(1);
  g.add_edge(0, 1);
  g.set_win(1);
  g.freeze();
  const auto reports = winning_coalitions(g);
  REQUIRE(reports.size() == 3);
  CHECK(reports[0].members == std::vector<int>{0});
  CHECK(reports[0].winning);
  CHECK(reports[0].minimal);
  CHECK(reports[0].god == std::optional<int>(1));
  CHECK(reports[1].members == std::vector<int>{1});
  CHECK(!reports[1].winning);
  CHECK(reports[2].members == std::vector<int>{0, 1});
  CHECK(reports[2].winning);
  CHECK(!reports[2].minimal);
}

TEST_CASE("the strategy budget is enforced") {
  // A first-mover vertex with 40 choices would need 2^40 - 1 joint strategies.
  GameGraph g;
  g.players = 2;
  const Vertex s = g.add_vertex(0);
  for (int i = 0; i < 40; ++i) {
    const Vertex t = g.add_vertex(1);
    g.add_edge(s, t);
    g.set_win(t);
  }
  g.start = s;
  g.freeze();
  CHECK_THROWS_AS(winning_coalitions(g, 1000), SpecError);
}

TEST_CASE("the built-in three-player example") {
  const GameGraph g = truel_graph();
  CHECK(g.players == 3);
  CHECK(g.vertex_count() == 6);
  CHECK(g.owner[static_cast<std::size_t>(g.start)] == 0);
  const auto reports = winning_coalitions(g);
  int winners = 0;
  for (const auto& rep : reports)
    if (rep.winning) ++winners;
  CHECK(winners == 4);  // three pairs and the grand coalition
}
