#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "godgraph/graph.hpp"

namespace godgraph {

enum class Verdict : std::int8_t { WIN_P0 = 0, WIN_P1 = 1, DRAW = 2 };

const char* verdict_name(Verdict v);

struct SolveResult {
  std::vector<Verdict> value;      // per vertex
  std::vector<std::int32_t> dtm;   // plies to the end under optimal play; -1 for draws
  Verdict start_verdict = Verdict::DRAW;
  std::optional<int> god;          // first-player move count, set for win verdicts
  std::optional<int> dtm_start;
  std::int64_t count_win_p0 = 0;
  std::int64_t count_win_p1 = 0;
  std::int64_t count_draw = 0;
};

// Backward induction over a bipartite two-player graph. A win terminal is a
// win for the opponent of its owner (the player who moved last). A vertex is
// a win for X when its owner is X and some successor is a win for X, or its
// owner is the opponent and every successor is a win for X. Unlabeled
// vertices are draws. dtm is minimal for the winner and maximal for the
// loser; the god number counts first-player moves along that line.
SolveResult solve_retrograde(const GameGraph& g);

// God number for a given dtm at a vertex: the number of P0 moves in an
// optimal line of `dtm` plies starting at a vertex owned by `owner`.
int god_from_dtm(int dtm, int owner);

enum class StrategyKind { win, draw };

// Restriction of g to a strategy for `side`: only side-owned edges are
// removed. For a win strategy, side keeps exactly its dtm-optimal edges
// inside its winning region; for a draw strategy it keeps the edges into
// non-losing vertices. Opponent edges are always kept.
GameGraph extract_strategy(const GameGraph& g, const SolveResult& solved, int side,
                           StrategyKind kind);

struct StrategyCheck {
  bool ok = false;
  std::string reason;               // set when not ok
  bool used_enumeration = false;    // maximal-simple-path route vs certificate
  std::int64_t paths = 0;           // enumerated maximal simple paths
  int max_first_player_edges = -1;  // over enumerated plays
};

// Verifies that `strategy` secures `kind` for `side` from the start, and for
// win strategies that the worst play uses exactly `claimed_god` first-player
// moves. Small reachable sets are checked by enumerating every maximal
// simple play; larger ones by a local dtm certificate.
StrategyCheck verify_strategy(const GameGraph& g, const GameGraph& strategy, int side,
                              StrategyKind kind, std::optional<int> claimed_god,
                              std::int64_t path_budget = 1 << 20);

// Longest drawn play measured in first-player moves, over all maximal simple
// plays from the start; empty when the enumeration exceeds `path_budget`.
std::optional<int> draw_l_max(const GameGraph& g, std::int64_t path_budget = 1 << 20);

}  // namespace godgraph
