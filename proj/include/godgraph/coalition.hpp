#pragma once

#include <optional>
#include <vector>

#include "godgraph/graph.hpp"

namespace godgraph {

// In an n-player alternation graph a win terminal owned by player j pays the
// previous mover, player (j-1) mod n.
int terminal_payee(const GameGraph& g, Vertex v);

struct CoalitionReport {
  std::vector<int> members;
  bool winning = false;
  bool minimal = false;          // winning, and no proper subset wins
  std::optional<int> god;        // over winning joint strategies, the least
                                 // worst-case count of player-0 moves
};

// Exhaustive coalition analysis from g.start: a coalition wins when its
// members can restrict their own move choices so that every maximal simple
// play ends at a win terminal paying a member. Joint strategies keep a
// nonempty choice at every owned non-terminal vertex. Throws SpecError when
// the strategy space exceeds `budget`.
std::vector<CoalitionReport> winning_coalitions(const GameGraph& g,
                                                std::uint64_t budget = 1u << 20);

std::optional<int> coalition_god(const GameGraph& g, const std::vector<int>& members,
                                 std::uint64_t budget = 1u << 20);

// Three-player example: player 0 picks one of two targets; each target path
// ends in a win terminal for a different opponent.
GameGraph truel_graph();

}  // namespace godgraph
