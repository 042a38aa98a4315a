#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "godgraph/graph.hpp"
#include "godgraph/hosts.hpp"
#include "godgraph/solver.hpp"

namespace godgraph::oracle {

// Reference implementations kept deliberately independent of the main code
// paths; used to pin expected values and cross-check the fast routes.

// Largest finite pairwise distance, one plain search per source. Meant for
// graphs up to a few hundred vertices.
int brute_diameter(const GameGraph& g, Mode mode);

// Max over vertices of the finite hop count to the nearest win vertex, by a
// separate forward search from every vertex.
int brute_god_to_win(const GameGraph& g);

struct GameValue {
  Verdict value = Verdict::DRAW;
  int dtm = -1;  // total moves to the end under optimal play; -1 for draws
};

// History-aware minimax for two-player graphs of at most 25 vertices: a move
// onto an already-visited vertex ends the play as a draw, the winner
// minimizes total moves, the loser maximizes.
GameValue brute_game_value(const GameGraph& g);

std::uint64_t frame_stewart(int pegs, int disks);

// Normal play: first player wins iff the pile xor is nonzero. Misere play
// flips only the all-piles-at-most-one case.
bool nim_first_player_wins(const std::vector<int>& piles, bool misere);

// Heuristic Hamiltonian path search on the undirected closure, extending
// toward the fewest onward choices first. nullopt when the step budget runs
// out without finding one.
std::optional<std::vector<Vertex>> hamiltonian_path(const GameGraph& g,
                                                    std::uint64_t budget = 1ull << 22);

// Orbit sizes of position strings under all rotations and reversals,
// ascending.
std::vector<int> dihedral_orbit_sizes(const std::vector<std::string>& arrangements);

// Every connected simple graph on n vertices, one representative per
// isomorphism class; n at most 6.
std::vector<HostGraph> connected_hosts_up_to_iso(int n);

}  // namespace godgraph::oracle
