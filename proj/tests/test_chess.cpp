#include "doctest.h"

#include "godgraph/chess.hpp"
#include "godgraph/solver.hpp"
#include "godgraph/util.hpp"

using namespace godgraph;

TEST_CASE("board text round trip") {
  const std::string text = "4x3:k..q/..../K..Q w";
  const MiniBoard b = parse_board(text);
  CHECK(b.width == 4);
  CHECK(b.height == 3);
  CHECK(b.side == 0);
  CHECK(b.at(0, 0) == 'K');
  CHECK(b.at(0, 3) == 'Q');
  CHECK(b.at(2, 0) == 'k');
  CHECK(b.at(2, 3) == 'q');
  CHECK(board_text(b) == text);
}

TEST_CASE("bad boards are rejected") {
  CHECK_THROWS_AS(parse_board("4x3:k..q/..../K..Q"), SpecError);   // no side
  CHECK_THROWS_AS(parse_board("4x3:kq/..../K..Q w"), SpecError);   // short rank
  CHECK_THROWS_AS(parse_board("4x3:k..q/..../Kx.Q w"), SpecError); // bad piece
  CHECK_THROWS_AS(parse_board("4x3:K..q/..../K..Q w"), SpecError); // two white kings
  CHECK_THROWS_AS(parse_board("4x3:...q/..../K..Q w"), SpecError); // no black king
  CHECK_THROWS_AS(
      parse_board("9x9:k......../........./........./........./........./........./........./"
                  "........./........K w"),
      SpecError);  // over 64 squares
}

TEST_CASE("check detection respects blockers") {
  // Queen on b2 shields the white king from the black queen on b3... but the
  // a-file queen does hit the king.
  const MiniBoard open = parse_board("3x3:q.k/.../K.. w");
  CHECK(in_check(open, 0));
  CHECK(!in_check(open, 1));
  const MiniBoard shielded = parse_board("3x3:q.k/Q../K.. w");
  CHECK(!in_check(shielded, 0));
}

TEST_CASE("kings never step next to each other") {
  // Lone kings two files apart: the squares between them are off limits.
  const MiniBoard b = parse_board("3x1:k.K w");
  const auto moves = legal_moves(b);
  CHECK(moves.empty());  // b1 touches the black king; no other square exists
  CHECK(board_status(b) == BoardStatus::dead);
}

TEST_CASE("pawn pushes, captures, freezes") {
  // White pawn may push; the king has one safe square.
  const MiniBoard push = parse_board("3x3:..k/P../K.. w");
  CHECK(legal_moves(push).size() == 2);  // Pa3 and Kb1

  // A pawn on the last rank never moves again.
  const MiniBoard frozen = parse_board("3x3:P.k/.../K.. w");
  CHECK(legal_moves(frozen).size() == 2);  // both king steps

  // Black pawn moves toward rank 1.
  const MiniBoard black = parse_board("3x3:p.k/.../..K b");
  const auto bm = legal_moves(black);
  bool pushed = false;
  for (const MiniBoard& m : bm)
    if (m.at(1, 0) == 'p') pushed = true;
  CHECK(pushed);

  // In check from a pawn: capture it or step away.
  const MiniBoard attacked = parse_board("3x3:k../.p./K.P w");
  CHECK(in_check(attacked, 0));
  const auto evasions = legal_moves(attacked);
  CHECK(evasions.size() == 2);  // Kb1 and Pxb2
  bool captured = false;
  for (const MiniBoard& m : evasions)
    if (m.at(1, 1) == 'P') captured = true;
  CHECK(captured);
}

TEST_CASE("mate, stalemate, dead position") {
  const MiniBoard mate = parse_board("3x3:k../Q../.K. b");
  CHECK(in_check(mate, 1));
  CHECK(legal_moves(mate).empty());
  CHECK(board_status(mate) == BoardStatus::mate);

  const MiniBoard stale = parse_board("3x3:k../.../KQ. b");
  CHECK(!in_check(stale, 1));
  CHECK(legal_moves(stale).empty());
  CHECK(board_status(stale) == BoardStatus::stalemate);

  CHECK(board_status(parse_board("3x3:k../.../..K w")) == BoardStatus::dead);
}

TEST_CASE("the opening position has eight moves") {
  CHECK(legal_moves(parse_board("3x4:q.k/.../.../Q.K w")).size() == 8);
}

TEST_CASE("positions with the idle side in check are rejected") {
  CHECK_THROWS_AS(gen_chess_graph(parse_board("3x3:k../Q../.K. w")), SpecError);
}

TEST_CASE("a mated start is a solved graph of one vertex") {
  const GameGraph g = gen_chess_graph(parse_board("3x3:k../Q../.K. b"));
  CHECK(g.vertex_count() == 1);
  CHECK(g.terminal[0] == 1);
  CHECK(g.win[0] == 1);
  CHECK(g.owner[0] == 1);
  const SolveResult s = solve_retrograde(g);
  CHECK(s.start_verdict == Verdict::WIN_P0);
  CHECK(s.god == std::optional<int>(0));
}

TEST_CASE("mate in one from the four-wide figure") {
  const GameGraph g = gen_chess_graph(parse_board("4x3:k..q/..../K..Q w"));
  const SolveResult s = solve_retrograde(g);
  CHECK(s.start_verdict == Verdict::WIN_P0);
  CHECK(s.dtm_start == std::optional<int>(1));
  CHECK(s.god == std::optional<int>(1));
}

TEST_CASE("graph labels parse back to boards") {
  const GameGraph g = gen_chess_graph(parse_board("3x1:k.K w"));
  REQUIRE(g.vertex_count() == 1);
  const MiniBoard b = parse_board(g.label[0]);
  CHECK(b.width == 3);
  CHECK(board_status(b) == BoardStatus::dead);
}
