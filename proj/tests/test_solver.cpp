#include "doctest.h"

#include "godgraph/solver.hpp"
#include "godgraph/util.hpp"

using namespace godgraph;

namespace {

// s -> t, t a win terminal of the opponent's color: mate in one.
GameGraph mate_in_one() {
  GameGraph g;
  g.players = 2;
  g.add_vertex(0);
  g.add_vertex(1);
  g.add_edge(0, 1);
  g.set_win(1);
  g.start = 0;
  g.freeze();
  return g;
}

// Start is lost for the mover via two lines of different lengths.
//   s(0) -> x(1) -> xt(0, win)            short loss
//   s(0) -> y(1) -> y2(0) -> y3(1) -> yt(0, win)   long loss
GameGraph forced_loss() {
  GameGraph g;
  g.players = 2;
  const Vertex s = g.add_vertex(0);
  const Vertex x = g.add_vertex(1);
  const Vertex xt = g.add_vertex(0);
  const Vertex y = g.add_vertex(1);
  const Vertex y2 = g.add_vertex(0);
  const Vertex y3 = g.add_vertex(1);
  const Vertex yt = g.add_vertex(0);
  g.add_edge(s, x);
  g.add_edge(x, xt);
  g.add_edge(s, y);
  g.add_edge(y, y2);
  g.add_edge(y2, y3);
  g.add_edge(y3, yt);
  g.set_win(xt);
  g.set_win(yt);
  g.start = s;
  g.freeze();
  return g;
}

// The mover may win immediately or via a detour; the winner takes the
// short road.
GameGraph quick_or_slow_win() {
  GameGraph g;
  g.players = 2;
  const Vertex s = g.add_vertex(0);
  const Vertex tf = g.add_vertex(1);
  const Vertex b = g.add_vertex(1);
  const Vertex s2 = g.add_vertex(0);
  const Vertex t2 = g.add_vertex(1);
  g.add_edge(s, tf);
  g.add_edge(s, b);
  g.add_edge(b, s2);
  g.add_edge(s2, t2);
  g.set_win(tf);
  g.set_win(t2);
  g.start = s;
  g.freeze();
  return g;
}

// s may walk into a lost line or sit in a dead end: the dead end saves the
// draw.
GameGraph avoidable_loss() {
  GameGraph g;
  g.players = 2;
  const Vertex s = g.add_vertex(0);
  const Vertex c = g.add_vertex(1);
  const Vertex ct = g.add_vertex(0);   // terminal, no win flag: dead draw
  const Vertex cw = g.add_vertex(0);   // win terminal paying player 1
  const Vertex d = g.add_vertex(1);
  const Vertex dt = g.add_vertex(0);
  g.add_edge(s, c);
  g.add_edge(c, ct);
  g.add_edge(c, cw);
  g.add_edge(s, d);
  g.add_edge(d, dt);
  g.set_win(cw);
  g.start = s;
  g.freeze();
  return g;
}

}  // namespace

TEST_CASE("mate in one") {
  const GameGraph g = mate_in_one();
  const SolveResult r = solve_retrograde(g);
  CHECK(r.start_verdict == Verdict::WIN_P0);
  CHECK(r.dtm_start == std::optional<int>(1));
  CHECK(r.god == std::optional<int>(1));
  CHECK(r.count_win_p0 == 2);
  CHECK(r.count_win_p1 == 0);
  CHECK(r.count_draw == 0);
}

TEST_CASE("the loser drags the game out") {
  const GameGraph g = forced_loss();
  const SolveResult r = solve_retrograde(g);
  CHECK(r.start_verdict == Verdict::WIN_P1);
  CHECK(r.dtm_start == std::optional<int>(4));
  CHECK(r.god == std::optional<int>(2));
  CHECK(r.value[1] == Verdict::WIN_P1);  // x
  CHECK(r.dtm[1] == 1);
}

TEST_CASE("the winner ends it quickly") {
  const GameGraph g = quick_or_slow_win();
  const SolveResult r = solve_retrograde(g);
  CHECK(r.start_verdict == Verdict::WIN_P0);
  CHECK(r.dtm_start == std::optional<int>(1));
  CHECK(r.god == std::optional<int>(1));
}

TEST_CASE("a cycle with no terminals is drawn") {
  GameGraph g;
  g.players = 2;
  g.add_vertex(0);
  g.add_vertex(1);
  g.add_edge(0, 1);
  g.add_edge(1, 0);
  g.freeze();
  const SolveResult r = solve_retrograde(g);
  CHECK(r.start_verdict == Verdict::DRAW);
  CHECK(!r.dtm_start.has_value());
  CHECK(!r.god.has_value());
  CHECK(r.count_draw == 2);
}

TEST_CASE("an avoidable loss is a draw") {
  const GameGraph g = avoidable_loss();
  const SolveResult r = solve_retrograde(g);
  CHECK(r.start_verdict == Verdict::DRAW);
  CHECK(r.value[1] == Verdict::WIN_P1);  // c
  CHECK(r.value[4] == Verdict::DRAW);    // d
}

TEST_CASE("god counts only first-player moves") {
  CHECK(god_from_dtm(1, 0) == 1);
  CHECK(god_from_dtm(2, 0) == 1);
  CHECK(god_from_dtm(3, 0) == 2);
  CHECK(god_from_dtm(4, 0) == 2);
  CHECK(god_from_dtm(0, 1) == 0);
  CHECK(god_from_dtm(2, 1) == 1);
  CHECK(god_from_dtm(3, 1) == 1);
  CHECK(god_from_dtm(5, 1) == 2);
}

TEST_CASE("input validation") {
  GameGraph g;
  g.players = 3;
  g.add_vertex(0);
  g.freeze();
  CHECK_THROWS_AS(solve_retrograde(g), SpecError);

  GameGraph h;
  h.players = 2;
  h.add_vertex(0);
  h.add_vertex(0);
  h.add_edge(0, 1);  // same owner on both ends
  h.freeze();
  CHECK_THROWS_AS(solve_retrograde(h), SpecError);
}

TEST_CASE("win strategy extraction and verification") {
  const GameGraph g = quick_or_slow_win();
  const SolveResult r = solve_retrograde(g);
  const GameGraph strat = extract_strategy(g, r, 0, StrategyKind::win);
  CHECK(strat.out[0] == std::vector<Vertex>{1});  // only the quick mate kept
  const StrategyCheck chk = verify_strategy(g, strat, 0, StrategyKind::win, r.god);
  CHECK(chk.ok);
  CHECK(chk.used_enumeration);
  CHECK(chk.max_first_player_edges == 1);
}

TEST_CASE("a valid strategy with the wrong god claim is rejected") {
  const GameGraph g = quick_or_slow_win();
  GameGraph slow = g;
  slow.out[0] = {2};  // keep only the detour
  slow.freeze();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) slow.win[v] = g.win[v];
  CHECK(verify_strategy(g, slow, 0, StrategyKind::win, 2).ok);
  const StrategyCheck bad = verify_strategy(g, slow, 0, StrategyKind::win, 1);
  CHECK(!bad.ok);
  CHECK(bad.reason.find("claimed") != std::string::npos);
}

TEST_CASE("a strategy may not touch opponent edges") {
  const GameGraph g = forced_loss();
  const SolveResult r = solve_retrograde(g);
  GameGraph tampered = extract_strategy(g, r, 1, StrategyKind::win);
  tampered.out[4].clear();  // y2 is owned by player 0
  tampered.freeze();
  for (std::size_t v = 0; v < g.vertex_count(); ++v) tampered.win[v] = g.win[v];
  const StrategyCheck chk = verify_strategy(g, tampered, 1, StrategyKind::win, r.god);
  CHECK(!chk.ok);
}

TEST_CASE("draw strategy avoids the losing line") {
  const GameGraph g = avoidable_loss();
  const SolveResult r = solve_retrograde(g);
  const GameGraph strat = extract_strategy(g, r, 0, StrategyKind::draw);
  CHECK(strat.out[0] == std::vector<Vertex>{4});  // only the dead end kept
  const StrategyCheck chk = verify_strategy(g, strat, 0, StrategyKind::draw, std::nullopt);
  CHECK(chk.ok);
  CHECK(draw_l_max(strat) == std::optional<int>(1));
}

TEST_CASE("draw play length on the full game") {
  // In the unrestricted game the worst drawn line is still one mover edge.
  CHECK(draw_l_max(avoidable_loss()) == std::optional<int>(1));
  CHECK(draw_l_max(avoidable_loss(), 0) == std::nullopt);  // budget exhausted
}
