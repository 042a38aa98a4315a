#pragma once

#include <string>
#include <vector>

#include "godgraph/families.hpp"
#include "godgraph/graph.hpp"

namespace godgraph {

// A reduced chess position on a small rectangular board. Pieces: kings and
// queens (required: exactly one king per side) plus optional pawns. Pawns
// step one square forward, capture diagonally forward, and freeze on the
// last rank. No castling, en passant, promotion, or fifty-move rule.
struct MiniBoard {
  int width = 0;
  int height = 0;
  std::string cells;  // row-major from the bottom rank; '.', KQP white, kqp black
  int side = 0;       // 0 = white to move

  char at(int r, int c) const { return cells[static_cast<std::size_t>(r * width + c)]; }
  char& at(int r, int c) { return cells[static_cast<std::size_t>(r * width + c)]; }
};

// Format: "<W>x<H>:<rank H>/<rank H-1>/.../<rank 1> <w|b>", one char per
// square, '.' for empty. Example: "4x3:k..q/..../K..Q w".
MiniBoard parse_board(const std::string& text);
std::string board_text(const MiniBoard& b);

bool in_check(const MiniBoard& b, int side);
std::vector<MiniBoard> legal_moves(const MiniBoard& b);

enum class BoardStatus { ongoing, mate, stalemate, dead };
// dead = bare kings; mate/stalemate refer to the side to move.
BoardStatus board_status(const MiniBoard& b);

// Breadth-first closure of the positions reachable from `start`. Mates are
// win terminals (the mated side owns them, so the mover who delivered mate
// wins); stalemates and bare-king positions are plain terminals.
GameGraph gen_chess_graph(const MiniBoard& start, const GenOptions& opts = {});

}  // namespace godgraph
