#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "godgraph/graph.hpp"
#include "godgraph/hosts.hpp"
#include "godgraph/perm.hpp"

namespace godgraph {

struct GenOptions {
  int threads = 1;
  bool with_labels = true;
};

// Stones labeled 0..n-1 sit on the host's vertices; a move swaps the stones
// across one host edge. Vertices are all n! arrangements, id = lexicographic
// rank; the start is the sorted arrangement. No win set: the family is
// studied through distances and diameters.
GameGraph gen_transposition(const HostGraph& host, const GenOptions& opts = {});

// Like the transposition game, but only the hole (one distinguished label)
// swaps across an edge. Win set = the sorted arrangement.
// hole_label < 0 selects the highest label.
GameGraph gen_sliding(const HostGraph& host, int hole_label = -1, const GenOptions& opts = {});

struct PermutationGeneratorSet {
  int degree = 0;
  std::vector<Perm> generators;
  bool add_inverses = true;
  std::string name = "cayley";
};

// Cayley graph of the generated group: breadth-first closure from the
// identity, one arc per generator application (inverses added by default).
GameGraph gen_cayley(const PermutationGeneratorSet& gens, const GenOptions& opts = {});

struct HanoiSpec {
  int pegs = 3;
  int disks = 1;
};

// Vertices are all pegs^disks placements (id = base-pegs reading, smallest
// disk first); moves transfer a top disk onto a larger-or-empty top.
// Win set = everything on the last peg; start = everything on peg 0.
GameGraph gen_hanoi(const HanoiSpec& spec, const GenOptions& opts = {});

struct PegBoard {
  int width = 3;
  int height = 3;
  std::vector<std::pair<int, int>> missing;  // 0-based (row, col) empty at start
};

// Directed peg solitaire on a rectangular lattice with orthogonal jumps.
// Vertices are all 2^(w*h) patterns (id = mask); win set = one-peg patterns.
GameGraph gen_peg(const PegBoard& board, const GenOptions& opts = {});

struct MnkSpec {
  int m = 3;  // columns
  int n = 3;  // rows
  int k = 3;  // line length to win
};

// Two-player alternation game reachable move-by-move from the empty board.
// A board whose previous mover completed a k-line is terminal and marked win;
// a full board without one is a terminal draw.
GameGraph gen_mnk(const MnkSpec& spec, const GenOptions& opts = {});

struct NimSpec {
  std::vector<int> piles;
  bool misere = false;
};

// Full product of pile counts times side-to-move. Normal play: the all-zero
// states are win terminals (the player who emptied the last pile wins).
// Misere play appends one closing move from each all-zero state to a win
// terminal of the opposite side, flipping the outcome; its god numbers count
// that closing move.
GameGraph gen_nim(const NimSpec& spec, const GenOptions& opts = {});

enum class CardMove { any_adjacent, adjacent_if_left_greater, any_pair };

struct CardGameSpec {
  std::string cards;  // multiset, e.g. "QQKKAA" or "332211"
  bool cyclic = true;
  CardMove move = CardMove::any_adjacent;
  bool memory = false;
  std::string start;  // optional; defaults to the target (sorted ascending)
};

// Without memory: solitaire graph on the distinct arrangements, win set =
// target. With memory: two-player graph on (arrangement, last-swap-slot)
// pairs doubled by side; the slot blocked for the next move is the one just
// used, with an extra "none" value for the opening move.
GameGraph gen_cardgame(const CardGameSpec& spec, const GenOptions& opts = {});

// Number of distinct (arrangement, slot) classes in a memory-model graph,
// i.e. vertex_count / 2.
std::int64_t card_memory_states(const GameGraph& g);

// Half the summed host distances between the positions of each label, rounded
// down: a lower bound for the transposition-game distance.
int gamma_distance(const Perm& x, const Perm& y, const std::vector<std::vector<int>>& host_dist);

// Card values for the left-greater rule ('2'..'9' face value, T, J, Q, K, A).
int card_value(char c);

// Parses a family spec string and builds its graph. Forms:
//   transposition:<host>        sliding:<host>[:hole=K]
//   cayley:@file.perms          cayley:zn:<n>:<g1,g2,...>
//   hanoi:<pegs>:<disks>        peg:square:<WxH>[:missing=r,c]
//   mnk:<m>:<n>:<k>             nim:<p1,p2,...>[:misere]
//   card:<cards>:<cyclic|row>:<any|gt|anypair>[:memory]
GameGraph generate_from_spec(const std::string& spec, const GenOptions& opts = {});

// Layered expansion used by the generators that discover their state space:
// ids are assigned in canonical-byte sort order within each layer, so the
// result is identical for any thread count.
struct LayeredSpec {
  std::string name;
  std::string start;
  // Appends the successors of `state` to `out`.
  std::function<void(const std::string& state, std::vector<std::string>& out)> successors;
  std::function<int(const std::string& state)> owner_of;      // null: solitaire
  std::function<bool(const std::string& state)> is_win;       // null: no win set
  std::function<bool(const std::string& state)> expandable;   // null: always
  std::function<std::string(const std::string& state)> label_of;  // null: raw bytes
};

GameGraph expand_layered(const LayeredSpec& spec, const GenOptions& opts,
                         StateInterner* keep_interner = nullptr);

}  // namespace godgraph
