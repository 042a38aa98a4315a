#include "godgraph/families.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "godgraph/util.hpp"

namespace godgraph {

namespace {

std::string perm_label(const Perm& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i != 0) s += ' ';
    s += std::to_string(p[i] + 1);
  }
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t next = s.find(sep, pos);
    if (next == std::string::npos) next = s.size();
    parts.push_back(s.substr(pos, next - pos));
    pos = next + 1;
  }
  return parts;
}

int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw SpecError("bad integer \"" + s + "\"");
    return v;
  } catch (const SpecError&) {
    throw;
  } catch (const std::exception&) {
    throw SpecError("bad integer \"" + s + "\"");
  }
}

}  // namespace

GameGraph expand_layered(const LayeredSpec& spec, const GenOptions& opts,
                         StateInterner* keep_interner) {
  StateInterner local;
  StateInterner& pool = keep_interner != nullptr ? *keep_interner : local;
  GameGraph g;

  auto create = [&](const std::string& bytes) -> Vertex {
    const Vertex id = pool.intern(bytes);
    const int owner = spec.owner_of ? spec.owner_of(bytes) : kSolitaire;
    std::string lab;
    if (opts.with_labels) lab = spec.label_of ? spec.label_of(bytes) : bytes;
    const Vertex v = g.add_vertex(owner, std::move(lab));
    if (v != id) throw SpecError("layered expansion out of sync for " + spec.name);
    if (spec.is_win && spec.is_win(bytes)) g.set_win(v);
    return v;
  };

  create(spec.start);
  std::vector<Vertex> frontier{0};
  const int threads = std::max(1, opts.threads);

  while (!frontier.empty()) {
    std::vector<std::vector<std::string>> succ(frontier.size());
    auto work = [&](std::size_t lo, std::size_t hi) {
      for (std::size_t i = lo; i < hi; ++i) {
        const Vertex u = frontier[i];
        const std::string& bytes = pool.key(u);
        if (g.win[static_cast<std::size_t>(u)]) continue;  // win states are sinks
        if (spec.expandable && !spec.expandable(bytes)) continue;
        spec.successors(bytes, succ[i]);
      }
    };
    if (threads == 1 || frontier.size() < 2) {
      work(0, frontier.size());
    } else {
      const std::size_t parts = std::min<std::size_t>(static_cast<std::size_t>(threads),
                                                      frontier.size());
      const std::size_t chunk = (frontier.size() + parts - 1) / parts;
      std::vector<std::thread> workers;
      for (std::size_t t = 0; t < parts; ++t) {
        const std::size_t lo = t * chunk;
        const std::size_t hi = std::min(frontier.size(), lo + chunk);
        if (lo >= hi) break;
        workers.emplace_back(work, lo, hi);
      }
      for (auto& w : workers) w.join();
    }

    // New states get ids in canonical-byte order, so the numbering does not
    // depend on the thread split.
    std::vector<std::string> fresh;
    for (const auto& list : succ)
      for (const auto& s : list)
        if (!pool.lookup(s)) fresh.push_back(s);
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    check_cap(g.vertex_count() + fresh.size(), spec.name);

    std::vector<Vertex> next;
    next.reserve(fresh.size());
    for (const auto& s : fresh) next.push_back(create(s));
    for (std::size_t i = 0; i < frontier.size(); ++i)
      for (const auto& s : succ[i]) g.add_edge(frontier[i], *pool.lookup(s));
    frontier = std::move(next);
  }
  g.freeze();
  return g;
}

GameGraph gen_transposition(const HostGraph& host, const GenOptions& opts) {
  const int n = host.n;
  if (n < 1 || n > 20) throw SpecError("transposition host size out of range");
  const std::uint64_t total = factorial(n);
  check_cap(total, "transposition:" + host.name);

  GameGraph g;
  g.players = 0;
  g.arcs_symmetric = true;
  // Right-multiplication by edge transpositions: a Cayley graph of S_n.
  g.vertex_transitive_hint = true;
  for (std::uint64_t r = 0; r < total; ++r) {
    const Perm p = perm_unrank(n, r);
    g.add_vertex(kSolitaire, opts.with_labels ? perm_label(p) : std::string());
  }
  for (std::uint64_t r = 0; r < total; ++r) {
    const Perm p = perm_unrank(n, r);
    for (const auto& [a, b] : host.edges) {
      Perm q = p;
      std::swap(q[a], q[b]);
      const std::uint64_t qr = perm_rank(q);
      if (qr > r)
        g.add_undirected_edge(static_cast<Vertex>(r), static_cast<Vertex>(qr));
    }
  }
  g.start = 0;
  g.freeze();
  return g;
}

GameGraph gen_sliding(const HostGraph& host, int hole_label, const GenOptions& opts) {
  const int n = host.n;
  if (n < 1 || n > 20) throw SpecError("sliding host size out of range");
  const int hole = hole_label < 0 ? n - 1 : hole_label;
  if (hole < 0 || hole >= n) throw SpecError("hole label out of range");
  const std::uint64_t total = factorial(n);
  check_cap(total, "sliding:" + host.name);

  GameGraph g;
  g.players = 0;
  g.arcs_symmetric = true;
  for (std::uint64_t r = 0; r < total; ++r) {
    const Perm p = perm_unrank(n, r);
    g.add_vertex(kSolitaire, opts.with_labels ? perm_label(p) : std::string());
  }
  for (std::uint64_t r = 0; r < total; ++r) {
    const Perm p = perm_unrank(n, r);
    for (const auto& [a, b] : host.edges) {
      if (p[a] != hole && p[b] != hole) continue;
      Perm q = p;
      std::swap(q[a], q[b]);
      const std::uint64_t qr = perm_rank(q);
      if (qr > r)
        g.add_undirected_edge(static_cast<Vertex>(r), static_cast<Vertex>(qr));
    }
  }
  g.start = 0;
  g.set_win(0);  // the sorted arrangement
  g.freeze();
  return g;
}

GameGraph gen_cayley(const PermutationGeneratorSet& gens, const GenOptions& opts) {
  const int d = gens.degree;
  if (d < 1) throw SpecError("cayley generator degree must be positive");
  if (gens.generators.empty()) throw SpecError("cayley generator set is empty");
  std::vector<Perm> conn;
  for (const Perm& p : gens.generators) {
    if (static_cast<int>(p.size()) != d) throw SpecError("cayley generator degree mismatch");
    if (is_identity(p)) throw SpecError("identity is not a valid cayley generator");
    if (std::find(conn.begin(), conn.end(), p) == conn.end()) conn.push_back(p);
  }
  if (gens.add_inverses)
    for (std::size_t i = 0, m = conn.size(); i < m; ++i) {
      Perm inv = inverse(conn[i]);
      if (std::find(conn.begin(), conn.end(), inv) == conn.end()) conn.push_back(std::move(inv));
    }
  bool inverse_closed = true;
  for (const Perm& p : conn)
    if (std::find(conn.begin(), conn.end(), inverse(p)) == conn.end()) inverse_closed = false;

  LayeredSpec ls;
  ls.name = gens.name;
  ls.start = pack_perm(identity_perm(d));
  ls.successors = [conn, d](const std::string& bytes, std::vector<std::string>& out) {
    const Perm p = unpack_perm(bytes, d);
    for (const Perm& s : conn) out.push_back(pack_perm(compose(p, s)));
  };
  ls.label_of = [d](const std::string& bytes) { return perm_label(unpack_perm(bytes, d)); };

  GameGraph g = expand_layered(ls, opts);
  g.arcs_symmetric = inverse_closed;
  g.vertex_transitive_hint = true;
  return g;
}

GameGraph gen_hanoi(const HanoiSpec& spec, const GenOptions& opts) {
  const int p = spec.pegs;
  const int n = spec.disks;
  if (p < 3 || p > 9) throw SpecError("hanoi needs 3..9 pegs");
  if (n < 1 || n > 30) throw SpecError("hanoi needs 1..30 disks");
  std::uint64_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::uint64_t>(p);
    check_cap(total, "hanoi");
  }

  GameGraph g;
  g.players = 0;
  g.arcs_symmetric = true;
  std::vector<int> peg_of(n);  // peg of each disk, smallest first
  for (std::uint64_t id = 0; id < total; ++id) {
    std::uint64_t t = id;
    std::string lab;
    for (int i = 0; i < n; ++i) {
      peg_of[i] = static_cast<int>(t % p);
      t /= p;
      if (opts.with_labels) lab += static_cast<char>('0' + peg_of[i]);
    }
    g.add_vertex(kSolitaire, std::move(lab));
  }
  std::vector<int> top(p);  // smallest disk on each peg, n when empty
  std::uint64_t pow_cache[31];
  pow_cache[0] = 1;
  for (int i = 1; i <= n; ++i) pow_cache[i] = pow_cache[i - 1] * p;
  for (std::uint64_t id = 0; id < total; ++id) {
    std::uint64_t t = id;
    for (int i = 0; i < n; ++i) {
      peg_of[i] = static_cast<int>(t % p);
      t /= p;
    }
    std::fill(top.begin(), top.end(), n);
    for (int i = n - 1; i >= 0; --i) top[peg_of[i]] = i;
    for (int x = 0; x < p; ++x) {
      if (top[x] == n) continue;
      for (int y = 0; y < p; ++y) {
        if (y == x || top[y] <= top[x]) continue;
        const std::int64_t delta =
            static_cast<std::int64_t>(y - x) * static_cast<std::int64_t>(pow_cache[top[x]]);
        g.add_edge(static_cast<Vertex>(id),
                   static_cast<Vertex>(static_cast<std::int64_t>(id) + delta));
      }
    }
  }
  g.start = 0;
  g.set_win(static_cast<Vertex>(total - 1));  // everything on the last peg
  g.freeze();
  return g;
}

GameGraph gen_peg(const PegBoard& board, const GenOptions& opts) {
  const int w = board.width;
  const int h = board.height;
  if (w < 1 || h < 1 || w * h > 24) throw SpecError("peg board too large");
  const int cells = w * h;
  const std::uint32_t total = 1u << cells;
  check_cap(total, "peg");

  std::uint32_t start_mask = total - 1;
  for (const auto& [r, c] : board.missing) {
    if (r < 0 || r >= h || c < 0 || c >= w) throw SpecError("missing cell off the board");
    start_mask &= ~(1u << (r * w + c));
  }

  // Straight (from, over, to) jump triples, both orientations.
  std::vector<std::array<int, 3>> triples;
  for (int r = 0; r < h; ++r)
    for (int c = 0; c < w; ++c) {
      const int a = r * w + c;
      if (c + 2 < w) {
        triples.push_back({a, a + 1, a + 2});
        triples.push_back({a + 2, a + 1, a});
      }
      if (r + 2 < h) {
        triples.push_back({a, a + w, a + 2 * w});
        triples.push_back({a + 2 * w, a + w, a});
      }
    }

  GameGraph g;
  g.players = 0;
  for (std::uint32_t mask = 0; mask < total; ++mask) {
    std::string lab;
    if (opts.with_labels) {
      for (int r = 0; r < h; ++r) {
        if (r != 0) lab += '/';
        for (int c = 0; c < w; ++c) lab += (mask >> (r * w + c)) & 1u ? '1' : '0';
      }
    }
    g.add_vertex(kSolitaire, std::move(lab));
    if (std::popcount(mask) == 1) g.set_win(static_cast<Vertex>(mask));
  }
  for (std::uint32_t mask = 0; mask < total; ++mask)
    for (const auto& [from, over, to] : triples) {
      if (!((mask >> from) & 1u) || !((mask >> over) & 1u) || ((mask >> to) & 1u)) continue;
      const std::uint32_t next = mask ^ (1u << from) ^ (1u << over) ^ (1u << to);
      g.add_edge(static_cast<Vertex>(mask), static_cast<Vertex>(next));
    }
  g.start = static_cast<Vertex>(start_mask);
  g.freeze();
  return g;
}

namespace {

struct MnkBoard {
  int m, n, k;

  char side_to_move(const std::string& b) const {
    int x = 0, o = 0;
    for (char c : b) {
      if (c == 'X') ++x;
      if (c == 'O') ++o;
    }
    return x == o ? 'X' : 'O';
  }

  bool has_line(const std::string& b, char ch) const {
    static constexpr int kDirs[4][2] = {{1, 0}, {0, 1}, {1, 1}, {1, -1}};
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < m; ++c)
        for (const auto& d : kDirs) {
          const int er = r + (k - 1) * d[1];
          const int ec = c + (k - 1) * d[0];
          if (er < 0 || er >= n || ec < 0 || ec >= m) continue;
          bool all = true;
          for (int i = 0; i < k && all; ++i)
            all = b[static_cast<std::size_t>((r + i * d[1]) * m + (c + i * d[0]))] == ch;
          if (all) return true;
        }
    return false;
  }

  // The mark of the player who moved last.
  char prev_mark(const std::string& b) const { return side_to_move(b) == 'X' ? 'O' : 'X'; }
};

}  // namespace

GameGraph gen_mnk(const MnkSpec& spec, const GenOptions& opts) {
  if (spec.m < 1 || spec.n < 1 || spec.k < 1) throw SpecError("mnk parameters must be positive");
  const MnkBoard board{spec.m, spec.n, spec.k};
  const std::string name =
      "mnk:" + std::to_string(spec.m) + ":" + std::to_string(spec.n) + ":" + std::to_string(spec.k);

  LayeredSpec ls;
  ls.name = name;
  ls.start.assign(static_cast<std::size_t>(spec.m * spec.n), '.');
  ls.owner_of = [board](const std::string& b) { return board.side_to_move(b) == 'X' ? 0 : 1; };
  ls.is_win = [board](const std::string& b) { return board.has_line(b, board.prev_mark(b)); };
  ls.expandable = [](const std::string& b) {
    return b.find('.') != std::string::npos;  // full board without a line: drawn terminal
  };
  ls.successors = [board](const std::string& b, std::vector<std::string>& out) {
    const char mark = board.side_to_move(b);
    for (std::size_t i = 0; i < b.size(); ++i)
      if (b[i] == '.') {
        out.push_back(b);
        out.back()[i] = mark;
      }
  };
  ls.label_of = [m = spec.m](const std::string& b) {
    std::string lab;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i != 0 && i % static_cast<std::size_t>(m) == 0) lab += '/';
      lab += b[i];
    }
    return lab;
  };

  GameGraph g = expand_layered(ls, opts);
  g.players = 2;
  return g;
}

GameGraph gen_nim(const NimSpec& spec, const GenOptions& opts) {
  const int m = static_cast<int>(spec.piles.size());
  if (m < 1) throw SpecError("nim needs at least one pile");
  std::uint64_t classes = 1;
  for (const int p : spec.piles) {
    if (p < 0) throw SpecError("nim pile sizes must be nonnegative");
    classes *= static_cast<std::uint64_t>(p) + 1;
    check_cap(classes * 2 + 2, "nim");
  }

  GameGraph g;
  g.players = 2;
  std::vector<int> digits(m);
  for (std::uint64_t idx = 0; idx < classes; ++idx) {
    std::uint64_t t = idx;
    for (int i = 0; i < m; ++i) {
      digits[i] = static_cast<int>(t % (spec.piles[i] + 1));
      t /= spec.piles[i] + 1;
    }
    for (int side = 0; side < 2; ++side) {
      std::string lab;
      if (opts.with_labels) {
        for (int i = 0; i < m; ++i) {
          if (i != 0) lab += ',';
          lab += std::to_string(digits[i]);
        }
        lab += side == 0 ? "|P0" : "|P1";
      }
      const Vertex v = g.add_vertex(side, std::move(lab));
      if (!spec.misere && idx == 0) g.set_win(v);  // last stone just taken
    }
  }
  Vertex closed[2] = {-1, -1};
  if (spec.misere)
    for (int side = 0; side < 2; ++side) {
      closed[side] = g.add_vertex(side, opts.with_labels ? (side == 0 ? "closed|P0" : "closed|P1")
                                                         : std::string());
      g.set_win(closed[side]);
    }

  std::vector<std::uint64_t> stride(m);
  {
    std::uint64_t s = 1;
    for (int i = 0; i < m; ++i) {
      stride[i] = s;
      s *= spec.piles[i] + 1;
    }
  }
  for (std::uint64_t idx = 0; idx < classes; ++idx) {
    std::uint64_t t = idx;
    for (int i = 0; i < m; ++i) {
      digits[i] = static_cast<int>(t % (spec.piles[i] + 1));
      t /= spec.piles[i] + 1;
    }
    for (int side = 0; side < 2; ++side) {
      const Vertex u = static_cast<Vertex>(idx * 2 + side);
      if (idx == 0) {
        // Empty piles: in misere play the side to move makes the closing
        // move and wins; in normal play this is already a win terminal.
        if (spec.misere) g.add_edge(u, closed[1 - side]);
        continue;
      }
      for (int i = 0; i < m; ++i)
        for (int take = 1; take <= digits[i]; ++take) {
          const std::uint64_t to = idx - static_cast<std::uint64_t>(take) * stride[i];
          g.add_edge(u, static_cast<Vertex>(to * 2 + (1 - side)));
        }
    }
  }
  std::uint64_t start_idx = 0;
  for (int i = 0; i < m; ++i) start_idx += static_cast<std::uint64_t>(spec.piles[i]) * stride[i];
  g.start = static_cast<Vertex>(start_idx * 2);
  g.freeze();
  return g;
}

int card_value(char c) {
  if (c >= '0' && c <= '9') return c - '0';
  switch (c) {
    case 'T': return 10;
    case 'J': return 11;
    case 'Q': return 12;
    case 'K': return 13;
    case 'A': return 14;
    default: throw SpecError(std::string("bad card '") + c + "'");
  }
}

namespace {

struct ArrangementSpace {
  std::vector<std::string> list;  // value-lexicographic order
  std::unordered_map<std::string, int> index;
  std::string target;  // sorted ascending
};

bool card_less(char a, char b) {
  const int va = card_value(a), vb = card_value(b);
  return va != vb ? va < vb : a < b;
}

ArrangementSpace enumerate_arrangements(const std::string& cards) {
  ArrangementSpace sp;
  std::string cur = cards;
  std::sort(cur.begin(), cur.end(), card_less);
  sp.target = cur;
  do {
    sp.index.emplace(cur, static_cast<int>(sp.list.size()));
    sp.list.push_back(cur);
  } while (std::next_permutation(cur.begin(), cur.end(), card_less));
  return sp;
}

// Position pairs a move may swap; index in this list is the memory value.
std::vector<std::pair<int, int>> card_slots(int len, bool cyclic, CardMove move) {
  std::vector<std::pair<int, int>> slots;
  if (move == CardMove::any_pair) {
    for (int i = 0; i < len; ++i)
      for (int j = i + 1; j < len; ++j) slots.emplace_back(i, j);
    return slots;
  }
  for (int i = 0; i + 1 < len; ++i) slots.emplace_back(i, i + 1);
  if (cyclic && len > 2) slots.emplace_back(len - 1, 0);
  return slots;
}

bool card_move_legal(const std::string& arr, const std::pair<int, int>& slot, CardMove move) {
  if (move != CardMove::adjacent_if_left_greater) return true;
  return card_value(arr[static_cast<std::size_t>(slot.first)]) >
         card_value(arr[static_cast<std::size_t>(slot.second)]);
}

}  // namespace

GameGraph gen_cardgame(const CardGameSpec& spec, const GenOptions& opts) {
  const int len = static_cast<int>(spec.cards.size());
  if (len < 2) throw SpecError("card game needs at least two cards");
  for (char c : spec.cards) card_value(c);
  ArrangementSpace sp = enumerate_arrangements(spec.cards);
  check_cap(sp.list.size(), "card:" + spec.cards);
  const auto slots = card_slots(len, spec.cyclic, spec.move);
  const int nslots = static_cast<int>(slots.size());

  int start_idx = sp.index.at(sp.target);
  if (!spec.start.empty()) {
    std::string sorted = spec.start;
    std::sort(sorted.begin(), sorted.end(), card_less);
    if (sorted != sp.target) throw SpecError("start arrangement uses different cards");
    start_idx = sp.index.at(spec.start);
  }

  GameGraph g;
  if (!spec.memory) {
    g.players = 0;
    g.arcs_symmetric = spec.move != CardMove::adjacent_if_left_greater;
    for (const auto& arr : sp.list)
      g.add_vertex(kSolitaire, opts.with_labels ? arr : std::string());
    for (int a = 0; a < static_cast<int>(sp.list.size()); ++a)
      for (const auto& slot : slots) {
        if (!card_move_legal(sp.list[static_cast<std::size_t>(a)], slot, spec.move)) continue;
        std::string b = sp.list[static_cast<std::size_t>(a)];
        std::swap(b[static_cast<std::size_t>(slot.first)],
                  b[static_cast<std::size_t>(slot.second)]);
        if (b == sp.list[static_cast<std::size_t>(a)]) continue;  // equal cards swapped
        g.add_edge(static_cast<Vertex>(a), static_cast<Vertex>(sp.index.at(b)));
      }
    g.start = static_cast<Vertex>(start_idx);
    g.set_win(static_cast<Vertex>(sp.index.at(sp.target)));
    g.freeze();
    return g;
  }

  // Memory model: (arrangement, blocked slot, side), over the full product.
  // Blocked slot nslots means "none" (only meaningful before the first move).
  check_cap(sp.list.size() * static_cast<std::uint64_t>(nslots + 1) * 2, "card:" + spec.cards);
  g.players = 2;
  auto vid = [&](int arr, int mem, int side) {
    return static_cast<Vertex>((static_cast<std::int64_t>(arr) * (nslots + 1) + mem) * 2 + side);
  };
  const int target_idx = sp.index.at(sp.target);
  for (int a = 0; a < static_cast<int>(sp.list.size()); ++a)
    for (int mem = 0; mem <= nslots; ++mem)
      for (int side = 0; side < 2; ++side) {
        std::string lab;
        if (opts.with_labels) {
          lab = sp.list[static_cast<std::size_t>(a)];
          lab += '|';
          lab += mem == nslots ? "-" : std::to_string(mem);
          lab += side == 0 ? "|P0" : "|P1";
        }
        const Vertex v = g.add_vertex(side, std::move(lab));
        if (a == target_idx) g.set_win(v);
      }
  for (int a = 0; a < static_cast<int>(sp.list.size()); ++a) {
    if (a == target_idx) continue;  // the game is over at the target
    for (int mem = 0; mem <= nslots; ++mem)
      for (int side = 0; side < 2; ++side)
        for (int f = 0; f < nslots; ++f) {
          if (f == mem) continue;
          if (!card_move_legal(sp.list[static_cast<std::size_t>(a)], slots[static_cast<std::size_t>(f)],
                               spec.move))
            continue;
          std::string b = sp.list[static_cast<std::size_t>(a)];
          std::swap(b[static_cast<std::size_t>(slots[static_cast<std::size_t>(f)].first)],
                    b[static_cast<std::size_t>(slots[static_cast<std::size_t>(f)].second)]);
          g.add_edge(vid(a, mem, side), vid(sp.index.at(b), f, 1 - side));
        }
  }
  g.start = vid(start_idx, nslots, 0);
  g.freeze();
  return g;
}

std::int64_t card_memory_states(const GameGraph& g) {
  return static_cast<std::int64_t>(g.vertex_count()) / 2;
}

int gamma_distance(const Perm& x, const Perm& y, const std::vector<std::vector<int>>& host_dist) {
  const int n = static_cast<int>(x.size());
  std::vector<int> pos_x(n), pos_y(n);
  for (int i = 0; i < n; ++i) {
    pos_x[x[static_cast<std::size_t>(i)]] = i;
    pos_y[y[static_cast<std::size_t>(i)]] = i;
  }
  int total = 0;
  for (int k = 0; k < n; ++k)
    total += host_dist[static_cast<std::size_t>(pos_x[k])][static_cast<std::size_t>(pos_y[k])];
  return total / 2;
}

namespace {

Perm zn_translation(int n, int step) {
  Perm p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    p[static_cast<std::size_t>(i)] = ((i + step) % n + n) % n;
  return p;
}

GameGraph gen_from_tokens(const std::vector<std::string>& tok, const std::string& whole,
                          const GenOptions& opts) {
  if (tok.empty() || tok[0].empty()) throw SpecError("empty family spec");
  const std::string& fam = tok[0];

  if (fam == "transposition" || fam == "sliding") {
    std::vector<std::string> host_tok;
    int hole = -1;
    for (std::size_t i = 1; i < tok.size(); ++i) {
      if (tok[i].rfind("hole=", 0) == 0) {
        if (fam != "sliding") throw SpecError("hole= only applies to sliding");
        hole = to_int(tok[i].substr(5)) - 1;  // 1-based, matching printed labels
      } else {
        host_tok.push_back(tok[i]);
      }
    }
    const HostGraph host = parse_host(host_tok);
    return fam == "transposition" ? gen_transposition(host, opts)
                                  : gen_sliding(host, hole, opts);
  }

  if (fam == "cayley") {
    if (tok.size() < 2) throw SpecError("cayley spec needs a generator source");
    PermutationGeneratorSet gens;
    gens.name = whole;
    std::size_t next = 2;
    if (tok[1].size() > 1 && tok[1][0] == '@') {
      gens.generators = load_perm_file(tok[1].substr(1));
      if (gens.generators.empty()) throw SpecError("no generators in file");
      gens.degree = static_cast<int>(gens.generators[0].size());
    } else if (tok[1] == "zn") {
      if (tok.size() < 4) throw SpecError("cayley:zn needs a modulus and step list");
      const int n = to_int(tok[2]);
      if (n < 2) throw SpecError("zn modulus must be at least 2");
      gens.degree = n;
      for (const std::string& s : split(tok[3], ',')) {
        const int step = to_int(s);
        if (step % n == 0) throw SpecError("zn step must be nonzero mod n");
        gens.generators.push_back(zn_translation(n, step));
      }
      next = 4;
    } else {
      throw SpecError("cayley source must be @file or zn:<n>:<steps>");
    }
    for (; next < tok.size(); ++next) {
      if (tok[next] == "noinv") gens.add_inverses = false;
      else throw SpecError("unknown cayley option \"" + tok[next] + "\"");
    }
    return gen_cayley(gens, opts);
  }

  if (fam == "hanoi") {
    if (tok.size() != 3) throw SpecError("hanoi spec is hanoi:<pegs>:<disks>");
    return gen_hanoi({to_int(tok[1]), to_int(tok[2])}, opts);
  }

  if (fam == "peg") {
    if (tok.size() < 3 || tok[1] != "square")
      throw SpecError("peg spec is peg:square:<WxH>[:missing=r,c]");
    const auto wh = split(tok[2], 'x');
    if (wh.size() != 2) throw SpecError("peg board is <WxH>");
    PegBoard board;
    board.width = to_int(wh[0]);
    board.height = to_int(wh[1]);
    for (std::size_t i = 3; i < tok.size(); ++i) {
      if (tok[i].rfind("missing=", 0) != 0)
        throw SpecError("unknown peg option \"" + tok[i] + "\"");
      const auto rc = split(tok[i].substr(8), ',');
      if (rc.size() != 2) throw SpecError("missing= takes r,c");
      board.missing.emplace_back(to_int(rc[0]) - 1, to_int(rc[1]) - 1);  // 1-based
    }
    return gen_peg(board, opts);
  }

  if (fam == "mnk") {
    if (tok.size() != 4) throw SpecError("mnk spec is mnk:<m>:<n>:<k>");
    return gen_mnk({to_int(tok[1]), to_int(tok[2]), to_int(tok[3])}, opts);
  }

  if (fam == "nim") {
    if (tok.size() < 2) throw SpecError("nim spec is nim:<p1,p2,...>[:misere]");
    NimSpec spec;
    for (const std::string& s : split(tok[1], ',')) spec.piles.push_back(to_int(s));
    for (std::size_t i = 2; i < tok.size(); ++i) {
      if (tok[i] == "misere") spec.misere = true;
      else throw SpecError("unknown nim option \"" + tok[i] + "\"");
    }
    return gen_nim(spec, opts);
  }

  if (fam == "card") {
    if (tok.size() < 2) throw SpecError("card spec is card:<cards>[:options]");
    CardGameSpec spec;
    spec.cards = tok[1];
    for (std::size_t i = 2; i < tok.size(); ++i) {
      const std::string& o = tok[i];
      if (o == "cyclic") spec.cyclic = true;
      else if (o == "row") spec.cyclic = false;
      else if (o == "any") spec.move = CardMove::any_adjacent;
      else if (o == "gt") spec.move = CardMove::adjacent_if_left_greater;
      else if (o == "anypair") spec.move = CardMove::any_pair;
      else if (o == "memory") spec.memory = true;
      else if (o.rfind("start=", 0) == 0) spec.start = o.substr(6);
      else throw SpecError("unknown card option \"" + o + "\"");
    }
    return gen_cardgame(spec, opts);
  }

  throw SpecError("unknown family \"" + fam + "\"");
}

}  // namespace

GameGraph generate_from_spec(const std::string& spec, const GenOptions& opts) {
  return gen_from_tokens(split(spec, ':'), spec, opts);
}

}  // namespace godgraph
