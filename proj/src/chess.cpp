#include "godgraph/chess.hpp"

#include <algorithm>
#include <cctype>

#include "godgraph/util.hpp"

namespace godgraph {

namespace {

bool is_white_piece(char c) { return c == 'K' || c == 'Q' || c == 'P'; }
bool is_black_piece(char c) { return c == 'k' || c == 'q' || c == 'p'; }
int piece_side(char c) { return is_white_piece(c) ? 0 : 1; }

constexpr int kKingDirs[8][2] = {{1, 0},  {-1, 0}, {0, 1},  {0, -1},
                                 {1, 1},  {1, -1}, {-1, 1}, {-1, -1}};

bool on_board(const MiniBoard& b, int r, int c) {
  return r >= 0 && r < b.height && c >= 0 && c < b.width;
}

}  // namespace

MiniBoard parse_board(const std::string& text) {
  const std::size_t colon = text.find(':');
  const std::size_t space = text.rfind(' ');
  if (colon == std::string::npos || space == std::string::npos || space < colon)
    throw SpecError("board format is <W>x<H>:<ranks top to bottom> <w|b>");
  const std::string dims = text.substr(0, colon);
  const std::size_t x = dims.find('x');
  if (x == std::string::npos) throw SpecError("board dimensions are <W>x<H>");
  MiniBoard b;
  try {
    b.width = std::stoi(dims.substr(0, x));
    b.height = std::stoi(dims.substr(x + 1));
  } catch (const std::exception&) {
    throw SpecError("bad board dimensions \"" + dims + "\"");
  }
  if (b.width < 1 || b.height < 1 || b.width * b.height > 64)
    throw SpecError("board must be between 1x1 and 64 squares");

  const std::string turn = text.substr(space + 1);
  if (turn == "w") b.side = 0;
  else if (turn == "b") b.side = 1;
  else throw SpecError("side to move must be w or b");

  std::vector<std::string> ranks;
  {
    std::string body = text.substr(colon + 1, space - colon - 1);
    std::size_t pos = 0;
    while (pos <= body.size()) {
      std::size_t next = body.find('/', pos);
      if (next == std::string::npos) next = body.size();
      ranks.push_back(body.substr(pos, next - pos));
      pos = next + 1;
    }
  }
  if (static_cast<int>(ranks.size()) != b.height)
    throw SpecError("board needs " + std::to_string(b.height) + " ranks");
  b.cells.assign(static_cast<std::size_t>(b.width * b.height), '.');
  int kings[2] = {0, 0};
  for (int i = 0; i < b.height; ++i) {
    const std::string& rank = ranks[static_cast<std::size_t>(i)];  // top rank first
    if (static_cast<int>(rank.size()) != b.width)
      throw SpecError("rank \"" + rank + "\" does not span the board");
    const int r = b.height - 1 - i;
    for (int c = 0; c < b.width; ++c) {
      const char ch = rank[static_cast<std::size_t>(c)];
      if (ch != '.' && !is_white_piece(ch) && !is_black_piece(ch))
        throw SpecError(std::string("unknown piece '") + ch + "'");
      if (ch == 'K') ++kings[0];
      if (ch == 'k') ++kings[1];
      b.at(r, c) = ch;
    }
  }
  if (kings[0] != 1 || kings[1] != 1) throw SpecError("each side needs exactly one king");
  return b;
}

std::string board_text(const MiniBoard& b) {
  std::string s = std::to_string(b.width) + "x" + std::to_string(b.height) + ":";
  for (int r = b.height - 1; r >= 0; --r) {
    for (int c = 0; c < b.width; ++c) s += b.at(r, c);
    if (r != 0) s += '/';
  }
  s += b.side == 0 ? " w" : " b";
  return s;
}

namespace {

bool square_attacked(const MiniBoard& b, int tr, int tc, int by_side) {
  for (int r = 0; r < b.height; ++r)
    for (int c = 0; c < b.width; ++c) {
      const char p = b.at(r, c);
      if (p == '.' || piece_side(p) != by_side) continue;
      const char kind = static_cast<char>(std::toupper(p));
      if (kind == 'K') {
        if (std::abs(r - tr) <= 1 && std::abs(c - tc) <= 1 && (r != tr || c != tc)) return true;
      } else if (kind == 'Q') {
        const int dr = tr - r, dc = tc - c;
        if (dr != 0 && dc != 0 && std::abs(dr) != std::abs(dc)) continue;
        if (dr == 0 && dc == 0) continue;
        const int sr = (dr > 0) - (dr < 0), sc = (dc > 0) - (dc < 0);
        bool blocked = false;
        for (int i = 1; i < std::max(std::abs(dr), std::abs(dc)); ++i)
          if (b.at(r + i * sr, c + i * sc) != '.') {
            blocked = true;
            break;
          }
        if (!blocked) return true;
      } else {  // pawn
        const int fwd = by_side == 0 ? 1 : -1;
        if (r + fwd == tr && (c - 1 == tc || c + 1 == tc)) return true;
      }
    }
  return false;
}

void find_king(const MiniBoard& b, int side, int& kr, int& kc) {
  const char k = side == 0 ? 'K' : 'k';
  for (int r = 0; r < b.height; ++r)
    for (int c = 0; c < b.width; ++c)
      if (b.at(r, c) == k) {
        kr = r;
        kc = c;
        return;
      }
  throw SpecError("king missing from board");
}

void try_move(const MiniBoard& b, int fr, int fc, int tr, int tc, std::vector<MiniBoard>& out) {
  const char dst = b.at(tr, tc);
  if (dst != '.' && piece_side(dst) == b.side) return;
  MiniBoard next = b;
  next.at(tr, tc) = next.at(fr, fc);
  next.at(fr, fc) = '.';
  next.side = 1 - b.side;
  int kr = 0, kc = 0;
  find_king(next, b.side, kr, kc);
  if (!square_attacked(next, kr, kc, 1 - b.side)) out.push_back(std::move(next));
}

}  // namespace

bool in_check(const MiniBoard& b, int side) {
  int kr = 0, kc = 0;
  find_king(b, side, kr, kc);
  return square_attacked(b, kr, kc, 1 - side);
}

std::vector<MiniBoard> legal_moves(const MiniBoard& b) {
  std::vector<MiniBoard> out;
  for (int r = 0; r < b.height; ++r)
    for (int c = 0; c < b.width; ++c) {
      const char p = b.at(r, c);
      if (p == '.' || piece_side(p) != b.side) continue;
      const char kind = static_cast<char>(std::toupper(p));
      if (kind == 'K') {
        for (const auto& d : kKingDirs)
          if (on_board(b, r + d[0], c + d[1])) try_move(b, r, c, r + d[0], c + d[1], out);
      } else if (kind == 'Q') {
        for (const auto& d : kKingDirs)
          for (int i = 1;; ++i) {
            const int tr = r + i * d[0], tc = c + i * d[1];
            if (!on_board(b, tr, tc)) break;
            try_move(b, r, c, tr, tc, out);
            if (b.at(tr, tc) != '.') break;
          }
      } else {  // pawn: single push, diagonal captures, frozen on the last rank
        const int fwd = b.side == 0 ? 1 : -1;
        const int tr = r + fwd;
        if (!on_board(b, tr, c)) continue;
        if (b.at(tr, c) == '.') try_move(b, r, c, tr, c, out);
        for (const int tc : {c - 1, c + 1})
          if (on_board(b, tr, tc) && b.at(tr, tc) != '.' && piece_side(b.at(tr, tc)) != b.side)
            try_move(b, r, c, tr, tc, out);
      }
    }
  return out;
}

BoardStatus board_status(const MiniBoard& b) {
  int pieces = 0;
  for (const char c : b.cells)
    if (c != '.') ++pieces;
  if (pieces == 2) return BoardStatus::dead;
  if (!legal_moves(b).empty()) return BoardStatus::ongoing;
  return in_check(b, b.side) ? BoardStatus::mate : BoardStatus::stalemate;
}

GameGraph gen_chess_graph(const MiniBoard& start, const GenOptions& opts) {
  if (in_check(start, 1 - start.side))
    throw SpecError("side not to move may not start in check");

  const int w = start.width, h = start.height;
  auto decode = [w, h](const std::string& bytes) {
    MiniBoard b;
    b.width = w;
    b.height = h;
    b.cells = bytes.substr(0, bytes.size() - 1);
    b.side = bytes.back() - '0';
    return b;
  };
  auto encode = [](const MiniBoard& b) {
    return b.cells + static_cast<char>('0' + b.side);
  };

  LayeredSpec ls;
  ls.name = "chess:" + board_text(start);
  ls.start = encode(start);
  ls.owner_of = [decode](const std::string& s) { return decode(s).side; };
  ls.is_win = [decode](const std::string& s) { return board_status(decode(s)) == BoardStatus::mate; };
  ls.expandable = [decode](const std::string& s) {
    return board_status(decode(s)) == BoardStatus::ongoing;
  };
  ls.successors = [decode, encode](const std::string& s, std::vector<std::string>& out) {
    for (const MiniBoard& next : legal_moves(decode(s))) out.push_back(encode(next));
  };
  ls.label_of = [decode](const std::string& s) { return board_text(decode(s)); };

  GameGraph g = expand_layered(ls, opts);
  g.players = 2;
  return g;
}

}  // namespace godgraph
