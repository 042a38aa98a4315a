#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "godgraph/graph.hpp"

namespace godgraph {

// Result of solving a solitaire game: shortest play from the start into the
// win set, plus the reachability profile of the start.
struct SolitaireResult {
  bool solvable = false;
  std::optional<int> god;              // empty when unsolvable
  std::vector<Vertex> witness;          // start..win vertex; empty when unsolvable
  std::vector<std::int64_t> profile;    // BFS sphere sizes from the start
  std::vector<int> component_diameters; // undirected, ordered like components()
  std::vector<Vertex> antipodal;        // last BFS layer from the start, ascending
};

// Shortest forward path from g.start into the win set. The witness follows the
// lexicographically smallest successor id among distance-optimal moves.
SolitaireResult solve_solitaire(const GameGraph& g);

// God number of a solitaire graph: the largest finite eccentricity over all
// vertices (forward arcs by default). On families with symmetric moves this is
// the largest component diameter; on one-way families such as peg jumps it is
// the longest shortest path the jump order allows.
int god_of_graph(const GameGraph& g, Mode mode = Mode::forward);

// Vertices in the last BFS layer from `root`, ascending.
std::vector<Vertex> antipodal_set(const GameGraph& g, Vertex root, Mode mode);

// A state space given by a successor function instead of stored arcs.
struct ImplicitGraph {
  std::string start;
  std::function<std::vector<std::string>(const std::string&)> successors;
};

struct ImplicitBfsResult {
  std::vector<std::int64_t> profile;  // sphere sizes from the start
  std::uint64_t reached = 0;
  int eccentricity = 0;               // depth of the last nonempty layer
  std::optional<int> target_distance; // set when a target was given and found
};

// Layered BFS holding only the previous and current layers plus a visited set.
// Stops early when `target` returns true for a discovered state.
ImplicitBfsResult implicit_bfs(const ImplicitGraph& g,
                               const std::function<bool(const std::string&)>& target,
                               const std::string& cap_spec_name);

}  // namespace godgraph
