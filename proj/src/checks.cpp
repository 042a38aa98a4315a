#include "godgraph/checks.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <random>
#include <sstream>
#include <unordered_map>

#include "godgraph/chess.hpp"
#include "godgraph/coalition.hpp"
#include "godgraph/families.hpp"
#include "godgraph/graph.hpp"
#include "godgraph/hosts.hpp"
#include "godgraph/oracle.hpp"
#include "godgraph/perm.hpp"
#include "godgraph/solitaire.hpp"
#include "godgraph/solver.hpp"
#include "godgraph/util.hpp"

namespace godgraph::checks {

std::string data_dir() {
  const char* env = std::getenv("GODGRAPH_DATA_DIR");
  if (env != nullptr && *env != '\0') return env;
#ifdef GODGRAPH_DATA_DIR
  return GODGRAPH_DATA_DIR;
#else
  return "data";
#endif
}

namespace {

std::string to_str(const std::string& s) { return s; }
std::string to_str(bool b) { return b ? "true" : "false"; }
std::string to_str(Verdict v) { return verdict_name(v); }
template <class T, class = std::enable_if_t<std::is_arithmetic_v<T>>>
std::string to_str(T v) {
  return std::to_string(v);
}
template <class T>
std::string to_str(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i != 0) s += ",";
    s += to_str(v[i]);
  }
  return s + ")";
}
template <class T>
std::string to_str(const std::optional<T>& v) {
  return v ? to_str(*v) : std::string("none");
}

struct Expect {
  bool ok = true;
  std::string detail;

  void note(const std::string& what) {
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
  template <class A, class B>
  void eq(const A& actual, const B& expected, const std::string& what) {
    if (actual == expected) return;
    ok = false;
    note(what + ": expected " + to_str(expected) + ", got " + to_str(actual));
  }
  void that(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    note(what);
  }
  Outcome done(const std::string& pass_note = "") const {
    return {ok, ok ? pass_note : detail};
  }
};

GenOptions quiet() {
  GenOptions o;
  o.with_labels = false;
  return o;
}

const HostGraph& named_host(const std::string& kind, int n) {
  static std::map<std::pair<std::string, int>, HostGraph> cache;
  auto key = std::make_pair(kind, n);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  HostGraph h;
  if (kind == "complete") h = host_complete(n);
  else if (kind == "path") h = host_path(n);
  else if (kind == "cycle") h = host_cycle(n);
  else if (kind == "star") h = host_star(n);
  else if (kind == "wheel") h = host_wheel(n);
  else throw SpecError("unknown host kind " + kind);
  return cache.emplace(key, std::move(h)).first->second;
}

// ---- criterion 1: god numbers of the transposition game on small hosts ----

Outcome check_transposition_table() {
  const std::map<std::string, std::vector<int>> table = {
      {"complete", {2, 3, 4, 5, 6}},
      {"path", {3, 6, 10, 15, 21}},
      {"cycle", {2, 4, 6, 9, 12}},
      {"star", {3, 4, 6, 7, 9}},
      {"wheel", {2, 3, 5, 6, 9}},
  };
  Expect e;
  for (const auto& [kind, expected] : table)
    for (int n = 3; n <= 7; ++n) {
      const GameGraph g = gen_transposition(named_host(kind, n), quiet());
      e.eq(god_of_graph(g), expected[static_cast<std::size_t>(n - 3)],
           kind + " host on " + std::to_string(n) + " vertices");
    }
  return e.done("25 host/size pairs");
}

// ---- criterion 2: cycle-host god follows floor((n^2+1)/4) ----

Outcome check_cycle_formula(int lo, int hi) {
  Expect e;
  for (int n = lo; n <= hi; ++n) {
    const GameGraph g = gen_transposition(named_host("cycle", n), quiet());
    e.eq(god_of_graph(g), (n * n + 1) / 4, "cycle host on " + std::to_string(n) + " vertices");
  }
  return e.done();
}

// ---- criterion 3: wheel-host god values sit inside the rim bounds ----

Outcome check_wheel_bounds(int lo, int hi) {
  const std::map<int, int> expected = {{4, 3}, {5, 5}, {6, 6}, {7, 9}, {8, 10}};
  Expect e;
  for (int total = lo; total <= hi; ++total) {
    const GameGraph g = gen_transposition(named_host("wheel", total), quiet());
    const int god = god_of_graph(g);
    const int rim = total - 1;
    e.eq(god, expected.at(total), "wheel on " + std::to_string(total) + " vertices");
    e.that(rim <= god && god <= (3 * rim) / 2,
           "wheel on " + std::to_string(total) + " vertices: " + std::to_string(god) +
               " outside [" + std::to_string(rim) + "," + std::to_string(3 * rim / 2) + "]");
  }
  return e.done();
}

// ---- criterion 4: the two triangulated 8-vertex strips ----

Outcome check_strip(const HostGraph& host, int expect_diameter,
                    const std::vector<std::int64_t>& expect_tail) {
  Expect e;
  const GameGraph g = gen_transposition(host, quiet());
  e.eq(g.vertex_count(), static_cast<std::size_t>(40320), host.name + " vertices");
  const BfsResult r = bfs(g, 0, Mode::forward);
  std::vector<std::int64_t> tail(r.profile.begin() + 1, r.profile.end());
  e.eq(tail, expect_tail, host.name + " profile");
  e.eq(diameter(g, Mode::forward), expect_diameter, host.name + " diameter");
  return e.done();
}

Outcome check_moebius() {
  return check_strip(host_moebius8(), 10,
                     {16, 137, 781, 3038, 7818, 12375, 10845, 4581, 700, 28});
}

Outcome check_cylinder() {
  return check_strip(host_cylinder8(), 11,
                     {16, 136, 784, 3104, 8008, 12480, 10606, 4383, 744, 56, 2});
}

// ---- criterion 5: sliding games on grid hosts ----

Outcome check_sliding_2x2() {
  Expect e;
  const GameGraph g = gen_sliding(host_grid(2, 2), -1, quiet());
  const auto comps = components(g);
  std::vector<std::size_t> sizes;
  for (const auto& c : comps) sizes.push_back(c.size());
  e.eq(sizes, std::vector<std::size_t>{12, 12}, "component sizes");
  e.eq(god_of_graph(g), 6, "god number");
  return e.done();
}

Outcome check_sliding_3x2() {
  Expect e;
  const GameGraph g = gen_sliding(host_grid(3, 2), -1, quiet());
  const auto comps = components(g);
  e.eq(comps.size(), static_cast<std::size_t>(2), "component count");
  for (const auto& comp : comps) {
    e.eq(comp.size(), static_cast<std::size_t>(360), "component vertices");
    std::vector<char> in(g.vertex_count(), 0);
    for (const Vertex v : comp) in[static_cast<std::size_t>(v)] = 1;
    std::int64_t arcs = 0;
    for (const Vertex u : comp)
      for (const Vertex v : g.out[static_cast<std::size_t>(u)])
        if (in[static_cast<std::size_t>(v)]) ++arcs;
    e.eq(arcs / 2, static_cast<std::int64_t>(420), "component edges");
  }
  e.eq(god_of_graph(g), 21, "god number");
  return e.done();
}

Outcome check_sliding_3x3_implicit() {
  // The solved component of the 3x3 sliding game, explored without storing
  // the graph.
  const HostGraph host = host_grid(3, 3);
  const auto adj = host_adjacency(host);
  ImplicitGraph ig;
  ig.start = pack_perm(identity_perm(9));
  ig.successors = [&adj](const std::string& bytes) {
    const Perm p = unpack_perm(bytes, 9);
    int hole = 0;
    while (p[static_cast<std::size_t>(hole)] != 8) ++hole;
    std::vector<std::string> out;
    for (const int nb : adj[static_cast<std::size_t>(hole)]) {
      Perm q = p;
      std::swap(q[static_cast<std::size_t>(hole)], q[static_cast<std::size_t>(nb)]);
      out.push_back(pack_perm(q));
    }
    return out;
  };
  const ImplicitBfsResult r = implicit_bfs(ig, nullptr, "sliding:grid:3x3");
  Expect e;
  e.eq(r.reached, static_cast<std::uint64_t>(181440), "reachable states");
  e.eq(r.eccentricity, 31, "eccentricity of the solved state");
  return e.done();
}

// ---- criterion 6: tower graphs ----

Outcome check_hanoi_3peg() {
  Expect e;
  for (int n = 1; n <= 7; ++n) {
    const GameGraph g = gen_hanoi({3, n}, quiet());
    std::uint64_t pw = 1;
    for (int i = 0; i < n; ++i) pw *= 3;
    e.eq(g.vertex_count(), static_cast<std::size_t>(pw), "3^" + std::to_string(n) + " vertices");
    e.eq(g.arc_count() / 2, static_cast<std::size_t>(3 * (pw - 1) / 2),
         std::to_string(n) + "-disk edges");
    e.eq(diameter(g, Mode::forward), (1 << n) - 1, std::to_string(n) + "-disk diameter");
    e.eq(god_of_graph(g), (1 << n) - 1, std::to_string(n) + "-disk god");
  }
  return e.done();
}

Outcome check_hanoi_4peg() {
  const std::map<int, int> expected = {{2, 3}, {3, 5}, {4, 9}, {5, 13}, {6, 17}};
  Expect e;
  for (int n = 2; n <= 6; ++n) {
    const GameGraph g = gen_hanoi({4, n}, quiet());
    const int d = diameter(g, Mode::forward);
    e.eq(d, expected.at(n), std::to_string(n) + "-disk diameter");
    e.eq(static_cast<std::uint64_t>(d), oracle::frame_stewart(4, n),
         std::to_string(n) + "-disk recursion value");
  }
  return e.done();
}

// ---- criterion 7: twist puzzles as cayley graphs ----

PermutationGeneratorSet load_gens(const std::string& file, const std::string& name) {
  PermutationGeneratorSet g;
  g.generators = load_perm_file(data_dir() + "/" + file);
  if (g.generators.empty()) throw SpecError("no generators in " + file);
  g.degree = static_cast<int>(g.generators[0].size());
  g.name = name;
  return g;
}

Outcome check_floppy() {
  Expect e;
  const GameGraph g = gen_cayley(load_gens("floppy.perms", "floppy"), quiet());
  e.eq(g.vertex_count(), static_cast<std::size_t>(2304), "states");
  e.eq(diameter(g, Mode::forward), 13, "diameter");
  return e.done();
}

Outcome check_fixed_floppy() {
  Expect e;
  const GameGraph g = gen_cayley(load_gens("fixed_floppy.perms", "fixed-floppy"), quiet());
  e.eq(g.vertex_count(), static_cast<std::size_t>(192), "states");
  e.eq(diameter(g, Mode::forward), 6, "diameter");
  return e.done();
}

PermutationGeneratorSet cube_squares(int count) {
  PermutationGeneratorSet q = load_gens("rubik_quarter.perms", "cube-squares");
  PermutationGeneratorSet s;
  s.degree = q.degree;
  s.name = "cube-squares-" + std::to_string(count);
  for (int i = 0; i < count; ++i)
    s.generators.push_back(compose(q.generators[static_cast<std::size_t>(i)],
                                   q.generators[static_cast<std::size_t>(i)]));
  return s;
}

Outcome check_three_square_group() {
  Expect e;
  const GameGraph g = gen_cayley(cube_squares(3), quiet());
  e.eq(g.vertex_count(), static_cast<std::size_t>(2592), "states");
  e.eq(g.arc_count() / 2, static_cast<std::size_t>(3888), "edges");
  e.eq(girth(g), 12, "girth");
  e.eq(diameter(g, Mode::forward), 14, "diameter");
  return e.done();
}

Outcome check_half_turn_group() {
  Expect e;
  const GameGraph g = gen_cayley(cube_squares(6), quiet());
  e.eq(g.vertex_count(), static_cast<std::size_t>(663552), "states");
  e.eq(g.arc_count() / 2, static_cast<std::size_t>(1990656), "edges");
  e.eq(diameter(g, Mode::forward), 15, "diameter");
  e.eq(girth(g), 4, "girth");
  return e.done();
}

Outcome check_two_ring_model() {
  Expect e;
  const GameGraph g = gen_cayley(load_gens("masterball.perms", "two-ring"), quiet());
  e.eq(g.vertex_count(), static_cast<std::size_t>(40320), "states");
  const int d = diameter(g, Mode::forward);
  e.eq(d, oracle::brute_diameter(g, Mode::forward), "diameter vs per-source recount");
  e.eq(d, 16, "diameter");
  return e.done();
}

// ---- criterion 8: the octahedron host ----

Outcome check_octahedron_transposition() {
  Expect e;
  const HostGraph host = host_octahedron();
  const GameGraph g = gen_transposition(host, quiet());
  e.eq(god_of_graph(g), 7, "transposition god");

  // The halved-total-displacement lower bound peaks at 6, one below the god
  // number, and never exceeds the true distance.
  const auto dist_m = host_distance_matrix(host);
  const std::size_t n = g.vertex_count();
  std::vector<Perm> perms(n);
  for (std::size_t r = 0; r < n; ++r) perms[r] = perm_unrank(6, r);
  int max_gamma = 0;
  bool bound_ok = true;
  for (std::size_t x = 0; x < n; ++x) {
    const BfsResult b = bfs(g, static_cast<Vertex>(x), Mode::forward);
    for (std::size_t y = 0; y < n; ++y) {
      const int lb = gamma_distance(perms[x], perms[y], dist_m);
      max_gamma = std::max(max_gamma, lb);
      if (lb > b.dist[y]) bound_ok = false;
    }
  }
  e.eq(max_gamma, 6, "max halved-displacement bound");
  e.that(bound_ok, "halved-displacement bound exceeded a true distance");
  return e.done();
}

Outcome check_octahedron_sliding() {
  Expect e;
  const GameGraph g = gen_sliding(host_octahedron(), -1, quiet());
  const int god = god_of_graph(g);
  e.eq(god, 11, "sliding god");
  e.eq(oracle::brute_diameter(g, Mode::forward), god, "independent recount");
  e.eq(oracle::brute_god_to_win(g), 11, "deepest distance to the solved states");
  return e.done();
}

// ---- criterion 9: k-in-a-row alternation games ----

Outcome check_mnk_333() {
  Expect e;
  const GameGraph g = gen_mnk({3, 3, 3}, quiet());
  e.eq(g.vertex_count(), static_cast<std::size_t>(5478), "positions");
  const BfsResult r = bfs(g, g.start, Mode::forward);
  e.eq(r.profile,
       std::vector<std::int64_t>{1, 9, 72, 252, 756, 1260, 1520, 1140, 390, 78},
       "positions per move number");
  const SolveResult s = solve_retrograde(g);
  e.eq(s.start_verdict, Verdict::DRAW, "value");
  return e.done();
}

Outcome check_mnk_222() {
  Expect e;
  const GameGraph g = gen_mnk({2, 2, 2}, quiet());
  const SolveResult s = solve_retrograde(g);
  e.eq(s.start_verdict, Verdict::WIN_P0, "value");
  e.eq(s.god, std::optional<int>(2), "god number");
  return e.done();
}

// ---- criterion 10: the six-card shuffle game ----

Outcome check_card_plain() {
  Expect e;
  CardGameSpec spec;
  spec.cards = "QQKKAA";
  const GameGraph g = gen_cardgame(spec, quiet());
  e.eq(g.vertex_count(), static_cast<std::size_t>(90), "arrangements");
  const BfsResult r = bfs(g, g.start, Mode::forward);  // start defaults to the target
  e.eq(r.profile, std::vector<std::int64_t>{1, 3, 9, 19, 29, 20, 9},
       "arrangements by distance from the target");
  return e.done();
}

Outcome check_card_memory_counts() {
  Expect e;
  CardGameSpec spec;
  spec.cards = "QQKKAA";
  spec.memory = true;
  const GameGraph g = gen_cardgame(spec, quiet());
  e.eq(g.vertex_count(), static_cast<std::size_t>(1260), "doubled states");
  e.eq(card_memory_states(g), static_cast<std::int64_t>(630), "per-side states");
  const SolveResult s = solve_retrograde(g);
  std::int64_t counts[2][3] = {{0, 0, 0}, {0, 0, 0}};
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    ++counts[v % 2][static_cast<int>(s.value[v])];
  e.eq(counts[0][0], static_cast<std::int64_t>(18), "mover wins (side 0)");
  e.eq(counts[0][1], static_cast<std::int64_t>(7), "mover losses (side 0)");
  e.eq(counts[0][2], static_cast<std::int64_t>(605), "draws (side 0)");
  e.eq(counts[1][1], static_cast<std::int64_t>(18), "mover wins (side 1)");
  e.eq(counts[1][0], static_cast<std::int64_t>(7), "mover losses (side 1)");
  e.eq(counts[1][2], static_cast<std::int64_t>(605), "draws (side 1)");
  return e.done();
}

Outcome check_card_winning_shuffles() {
  Expect e;
  CardGameSpec spec;
  spec.cards = "QQKKAA";
  spec.memory = true;
  const GameGraph g = gen_cardgame(spec, GenOptions{});  // labels on
  const SolveResult s = solve_retrograde(g);
  std::vector<std::string> winners;
  const std::string fresh = "|-|P0";  // side 0 to move, no blocked slot yet
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    const std::string& lab = g.label[v];
    if (lab.size() > fresh.size() &&
        lab.compare(lab.size() - fresh.size(), fresh.size(), fresh) == 0 &&
        s.value[v] == Verdict::WIN_P0)
      winners.push_back(lab.substr(0, lab.size() - fresh.size()));
  }
  std::sort(winners.begin(), winners.end());
  e.eq(winners, std::vector<std::string>{"AQKKAQ", "QKQKAA", "QQKAKA"}, "first-mover wins");
  return e.done();
}

Outcome check_card_orbits() {
  Expect e;
  CardGameSpec spec;
  spec.cards = "QQKKAA";
  const GameGraph g = gen_cardgame(spec, GenOptions{});
  const auto sizes = oracle::dihedral_orbit_sizes(g.label);
  e.eq(sizes, std::vector<int>{6, 6, 6, 6, 6, 6, 6, 12, 12, 12, 12},
       "rotation/reflection orbit sizes");
  return e.done();
}

// ---- criterion 11: stone piles ----

Outcome check_nim_vs_xor() {
  Expect e;
  NimSpec spec{{7, 7, 7}, false};
  const GameGraph g = gen_nim(spec, quiet());
  const SolveResult s = solve_retrograde(g);
  int bad = 0;
  for (int a = 0; a <= 7 && bad < 4; ++a)
    for (int b = 0; b <= 7 && bad < 4; ++b)
      for (int c = 0; c <= 7 && bad < 4; ++c) {
        const std::size_t idx = static_cast<std::size_t>(a + 8 * b + 64 * c);
        const Verdict v = s.value[idx * 2];  // side 0 to move
        const Verdict want = oracle::nim_first_player_wins({a, b, c}, false)
                                 ? Verdict::WIN_P0
                                 : Verdict::WIN_P1;
        if (v != want) {
          ++bad;
          e.eq(v, want,
               "piles " + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c));
        }
      }
  return e.done("512 pile triples");
}

Outcome check_nim_mirror() {
  Expect e;
  for (int n = 1; n <= 6; ++n) {
    NimSpec spec{{n, n}, false};
    const GameGraph g = gen_nim(spec, quiet());
    const SolveResult s = solve_retrograde(g);
    e.eq(s.start_verdict, Verdict::WIN_P1, "equal piles of " + std::to_string(n));
    e.eq(s.god, std::optional<int>(n), "god with piles of " + std::to_string(n));
  }
  return e.done();
}

// ---- criterion 12: peg jumps on the 3x3 board ----

Outcome check_peg() {
  Expect e;
  const GameGraph g = gen_peg({3, 3, {}}, quiet());
  e.eq(g.vertex_count(), static_cast<std::size_t>(512), "patterns");
  const ComponentDiameters cd = component_diameters(g);
  int max_diam = 0;
  for (const int d : cd.diameter) max_diam = std::max(max_diam, d);
  e.eq(max_diam, 5, "largest component diameter");
  const int god = god_of_graph(g);
  e.eq(god, oracle::brute_diameter(g, Mode::forward), "god number vs per-source recount");
  e.eq(god, 5, "god number");
  // The longest solvable position still sits only four jumps from a one-peg
  // state; the god number is realized by a chain into a stuck multi-peg state.
  const std::vector<std::int32_t> to_win = distances_to_set(g, g.win_vertices(), Mode::forward);
  const int deepest = *std::max_element(to_win.begin(), to_win.end());
  e.eq(deepest, oracle::brute_god_to_win(g), "deepest solvable vs per-source recount");
  e.eq(deepest, 4, "deepest solvable start");

  std::vector<int> comp_of(g.vertex_count(), -1);
  for (std::size_t i = 0; i < cd.comps.size(); ++i)
    for (const Vertex v : cd.comps[i]) comp_of[static_cast<std::size_t>(v)] = static_cast<int>(i);

  // A jump lands two cells from its origin along a row or column, so the
  // center of the 3x3 board is never a landing cell.  Removing the center
  // therefore isolates the start (diameter 0), removing an edge midpoint
  // allows exactly one jump into a dead position (diameter 1), and only the
  // corner-missing starts open up the diameter-4 component.
  const int kOneMissingDiameter[9] = {4, 1, 4, 1, 0, 1, 4, 1, 4};
  for (int cell = 0; cell < 9; ++cell) {
    const Vertex start = static_cast<Vertex>(511u & ~(1u << cell));
    const BfsResult r = bfs(g, start, Mode::forward);
    bool solvable = false;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
      if (g.win[v] && r.dist[v] >= 0) solvable = true;
    e.that(!solvable, "one-missing start " + std::to_string(cell) + " should be unsolvable");
    e.eq(cd.diameter[static_cast<std::size_t>(comp_of[static_cast<std::size_t>(start)])],
         kOneMissingDiameter[cell],
         "one-missing component diameter, cell " + std::to_string(cell));
  }

  GameGraph center = gen_peg({3, 3, {{1, 1}}}, quiet());
  const SolitaireResult sr = solve_solitaire(center);
  e.eq(sr.solvable, false, "center-missing start");
  e.that(sr.witness.empty(), "unsolvable start must have no witness");
  return e.done();
}

// ---- criterion 13: reduced chess endgames ----

Outcome check_chess_moves() {
  Expect e;
  const MiniBoard b = parse_board("3x4:q.k/.../.../Q.K w");
  e.eq(legal_moves(b).size(), static_cast<std::size_t>(8), "legal moves in the opening position");
  return e.done();
}

Outcome check_chess_invariants() {
  Expect e;
  const MiniBoard b = parse_board("3x4:q.k/.../.../Q.K w");
  const GameGraph g = gen_chess_graph(b, GenOptions{});
  const SolveResult s = solve_retrograde(g);  // also validates owner alternation
  (void)s;
  std::mt19937 rng(20250822);
  std::uniform_int_distribution<std::size_t> pick(0, g.vertex_count() - 1);
  int bad = 0;
  for (int i = 0; i < 10000 && bad < 4; ++i) {
    const std::size_t v = pick(rng);
    const MiniBoard pos = parse_board(g.label[v]);
    if (pos.side != g.owner[v]) {
      ++bad;
      e.that(false, "owner/side mismatch at vertex " + std::to_string(v));
    }
    if (in_check(pos, 1 - pos.side)) {
      ++bad;
      e.that(false, "side not to move is in check at vertex " + std::to_string(v));
    }
    for (const Vertex to : g.out[v])
      if (g.owner[static_cast<std::size_t>(to)] == g.owner[v]) {
        ++bad;
        e.that(false, "non-alternating move at vertex " + std::to_string(v));
        break;
      }
  }
  return e.done("10000 sampled positions");
}

Outcome check_chess_mate_in_one() {
  Expect e;
  const GameGraph g = gen_chess_graph(parse_board("4x3:k..q/..../K..Q w"), quiet());
  const SolveResult s = solve_retrograde(g);
  e.eq(s.start_verdict, Verdict::WIN_P0, "value");
  e.eq(s.god, std::optional<int>(1), "god number");
  e.eq(s.dtm_start, std::optional<int>(1), "plies to mate");
  return e.done();
}

Outcome check_chess_2x4_draw() {
  Expect e;
  const GameGraph g = gen_chess_graph(parse_board("2x4:kq/../../KQ w"), quiet());
  const SolveResult s = solve_retrograde(g);
  e.eq(s.start_verdict, Verdict::DRAW, "value");
  return e.done();
}

// ---- criterion 14: three-player coalitions ----

Outcome check_truel() {
  Expect e;
  const GameGraph g = truel_graph();
  const auto reports = winning_coalitions(g);
  e.eq(reports.size(), static_cast<std::size_t>(7), "coalition count");
  for (const auto& rep : reports) {
    const std::string who = to_str(rep.members);
    if (rep.members.size() == 1) {
      e.eq(rep.winning, false, "singleton " + who);
    } else if (rep.members.size() == 2) {
      e.eq(rep.winning, true, "pair " + who);
      e.eq(rep.minimal, true, "pair " + who + " minimal");
      e.eq(rep.god, std::optional<int>(1), "pair " + who + " god");
    } else {
      e.eq(rep.winning, true, "grand coalition");
      e.eq(rep.minimal, false, "grand coalition minimal");
    }
  }
  return e.done();
}

// ---- criterion 15: a circulant cayley graph ----

Outcome check_circulant() {
  Expect e;
  const GameGraph g = generate_from_spec("cayley:zn:713:48,88,138", quiet());
  e.eq(g.vertex_count(), static_cast<std::size_t>(713), "vertices");
  const BfsResult r = bfs(g, 0, Mode::forward);
  e.eq(r.profile, std::vector<std::int64_t>{1, 6, 18, 38, 66, 102, 140, 138, 140, 60, 4},
       "distance profile");
  e.eq(diameter(g, Mode::forward), 10, "diameter");
  return e.done();
}

// ---- criterion 16: randomized property suites ----

GameGraph random_game(std::mt19937& rng) {
  std::uniform_int_distribution<int> nsize(2, 12);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  const int n = nsize(rng);
  GameGraph g;
  g.players = 2;
  for (int v = 0; v < n; ++v) g.add_vertex(coin(rng) < 0.5 ? 0 : 1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v) {
      if (u == v || g.owner[static_cast<std::size_t>(u)] == g.owner[static_cast<std::size_t>(v)])
        continue;
      if (coin(rng) < 0.35) g.add_edge(u, v);
    }
  for (int v = 0; v < n; ++v)
    if (g.out[static_cast<std::size_t>(v)].empty() && coin(rng) < 0.5) g.set_win(v);
  g.start = 0;
  g.freeze();
  return g;
}

// History minimax with a per-vertex visit allowance; a move onto a vertex
// whose allowance is spent ends the play as a draw.
Verdict budget_value(const GameGraph& g, Vertex v, std::vector<std::uint8_t>& count, int limit,
                     std::unordered_map<std::string, Verdict>& memo) {
  std::string key(count.begin(), count.end());
  key.push_back(static_cast<char>(v));
  auto it = memo.find(key);
  if (it != memo.end()) return it->second;

  const int mover = g.owner[static_cast<std::size_t>(v)];
  Verdict best;
  if (g.terminal[static_cast<std::size_t>(v)]) {
    best = g.win[static_cast<std::size_t>(v)]
               ? (mover == 0 ? Verdict::WIN_P1 : Verdict::WIN_P0)
               : Verdict::DRAW;
  } else {
    const Verdict mine = mover == 0 ? Verdict::WIN_P0 : Verdict::WIN_P1;
    auto rank = [&](Verdict x) { return x == mine ? 2 : x == Verdict::DRAW ? 1 : 0; };
    int best_rank = -1;
    best = Verdict::DRAW;
    for (const Vertex s : g.out[static_cast<std::size_t>(v)]) {
      Verdict r;
      if (count[static_cast<std::size_t>(s)] >= limit) {
        r = Verdict::DRAW;
      } else {
        ++count[static_cast<std::size_t>(s)];
        r = budget_value(g, s, count, limit, memo);
        --count[static_cast<std::size_t>(s)];
      }
      if (rank(r) > best_rank) {
        best_rank = rank(r);
        best = r;
      }
    }
  }
  memo.emplace(std::move(key), best);
  return best;
}

Verdict history_verdict(const GameGraph& g, int limit) {
  std::vector<std::uint8_t> count(g.vertex_count(), 0);
  count[static_cast<std::size_t>(g.start)] = 1;
  std::unordered_map<std::string, Verdict> memo;
  return budget_value(g, g.start, count, limit, memo);
}

Outcome check_random_games() {
  Expect e;
  std::mt19937 rng(0xC0FFEE);
  int bad = 0;
  for (int trial = 0; trial < 200 && bad < 3; ++trial) {
    const GameGraph g = random_game(rng);
    const SolveResult s = solve_retrograde(g);
    const std::string tag = "trial " + std::to_string(trial);

    if (s.count_win_p0 + s.count_win_p1 + s.count_draw !=
        static_cast<std::int64_t>(g.vertex_count())) {
      ++bad;
      e.that(false, tag + ": verdict counts do not partition the vertices");
    }
    const oracle::GameValue ov = oracle::brute_game_value(g);
    if (ov.value != s.start_verdict) {
      ++bad;
      e.eq(s.start_verdict, ov.value, tag + " verdict");
      continue;
    }
    if (ov.value != Verdict::DRAW) {
      if (std::optional<int>(ov.dtm) != s.dtm_start) {
        ++bad;
        e.eq(s.dtm_start, std::optional<int>(ov.dtm), tag + " plies");
      }
      const int owner0 = g.owner[static_cast<std::size_t>(g.start)];
      if (s.god != std::optional<int>(god_from_dtm(ov.dtm, owner0))) {
        ++bad;
        e.eq(s.god, std::optional<int>(god_from_dtm(ov.dtm, owner0)), tag + " god");
      }
    }
    // A second visit allowance must not change any verdict.
    if (history_verdict(g, 1) != s.start_verdict || history_verdict(g, 2) != s.start_verdict) {
      ++bad;
      e.that(false, tag + ": verdict depends on the repetition allowance");
    }
  }
  return e.done("200 random games");
}

Outcome check_folklore_count() {
  Expect e;
  std::mt19937 rng(0xFACADE);
  std::uniform_int_distribution<int> nsize(2, 6);
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  int done = 0;
  while (done < 25) {
    const int n = nsize(rng);
    HostGraph h;
    h.n = n;
    h.name = "random" + std::to_string(done);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (coin(rng) < 0.5) h.edges.emplace_back(a, b);
    if (!host_connected(h)) continue;
    ++done;
    const GameGraph g = gen_transposition(h, quiet());
    e.eq(g.vertex_count(), static_cast<std::size_t>(factorial(n)),
         "arrangements over a connected host on " + std::to_string(n));
    e.eq(components(g).size(), static_cast<std::size_t>(1),
         "connectivity over a connected host on " + std::to_string(n));
  }
  return e.done("25 random connected hosts");
}

Outcome check_gamma_bound_random() {
  Expect e;
  const HostGraph host = host_octahedron();
  const auto dist_m = host_distance_matrix(host);
  const GameGraph g = gen_transposition(host, quiet());
  std::mt19937 rng(0xBEEF);
  std::uniform_int_distribution<std::uint64_t> pick(0, factorial(6) - 1);
  int bad = 0;
  for (int i = 0; i < 1000 && bad < 4; ++i) {
    const std::uint64_t x = pick(rng), y = pick(rng);
    const BfsResult b = bfs(g, static_cast<Vertex>(x), Mode::forward);
    const int lb = gamma_distance(perm_unrank(6, x), perm_unrank(6, y), dist_m);
    if (lb > b.dist[static_cast<std::size_t>(y)]) {
      ++bad;
      e.that(false, "bound " + std::to_string(lb) + " exceeds distance " +
                        std::to_string(b.dist[static_cast<std::size_t>(y)]) + " for pair " +
                        std::to_string(x) + "," + std::to_string(y));
    }
  }
  return e.done("1000 random pairs");
}

Outcome check_hamiltonian_hosts() {
  Expect e;
  int hosts = 0;
  for (int n = 1; n <= 5; ++n)
    for (const HostGraph& h : oracle::connected_hosts_up_to_iso(n)) {
      ++hosts;
      const GameGraph g = gen_transposition(h, quiet());
      const auto path = oracle::hamiltonian_path(g);
      e.that(path.has_value(), "no spanning path found on " + std::to_string(n) +
                                   "-vertex host " + h.name);
      if (path) e.eq(path->size(), g.vertex_count(), "path length on host " + h.name);
    }
  e.eq(hosts, 31, "connected hosts on up to 5 vertices");
  return e.done("31 hosts");
}

}  // namespace

const std::vector<Check>& all_checks() {
  static const std::vector<Check> checks = {
      {"01", 1, Tier::fast, "transposition god table", check_transposition_table},
      {"02a", 2, Tier::fast, "cycle god formula, up to 7 stones",
       [] { return check_cycle_formula(3, 7); }},
      {"02b", 2, Tier::slow, "cycle god formula, 8 stones",
       [] { return check_cycle_formula(8, 8); }},
      {"03a", 3, Tier::fast, "wheel god values and bounds, up to 7 vertices",
       [] { return check_wheel_bounds(4, 7); }},
      {"03b", 3, Tier::slow, "wheel god value and bounds, 8 vertices",
       [] { return check_wheel_bounds(8, 8); }},
      {"04a", 4, Tier::slow, "twisted 8-strip profile and diameter", check_moebius},
      {"04b", 4, Tier::slow, "straight 8-strip profile and diameter", check_cylinder},
      {"05a", 5, Tier::fast, "2x2 sliding components and god", check_sliding_2x2},
      {"05b", 5, Tier::fast, "3x2 sliding components, edges, god", check_sliding_3x2},
      {"05c", 5, Tier::slow, "3x3 sliding reachability and eccentricity",
       check_sliding_3x3_implicit},
      {"06a", 6, Tier::fast, "3-peg tower sizes and diameters", check_hanoi_3peg},
      {"06b", 6, Tier::fast, "4-peg tower diameters match the recursion", check_hanoi_4peg},
      {"07a", 7, Tier::fast, "flip puzzle state count and diameter", check_floppy},
      {"07b", 7, Tier::fast, "pinned flip puzzle state count and diameter", check_fixed_floppy},
      {"07c", 7, Tier::fast, "three-square cube group", check_three_square_group},
      {"07d", 7, Tier::slow, "half-turn cube group", check_half_turn_group},
      {"07e", 7, Tier::slow, "two-ring quarter-turn model", check_two_ring_model},
      {"08a", 8, Tier::fast, "octahedron transposition god and distance bound",
       check_octahedron_transposition},
      {"08b", 8, Tier::fast, "octahedron sliding god", check_octahedron_sliding},
      {"09a", 9, Tier::fast, "3,3,3 line game size, profile, value", check_mnk_333},
      {"09b", 9, Tier::fast, "2,2,2 line game value and god", check_mnk_222},
      {"10a", 10, Tier::fast, "six-card arrangements and target profile", check_card_plain},
      {"10b", 10, Tier::fast, "six-card memory state counts and verdicts",
       check_card_memory_counts},
      {"10c", 10, Tier::fast, "six-card winning opening shuffles", check_card_winning_shuffles},
      {"10d", 10, Tier::fast, "six-card symmetry orbits", check_card_orbits},
      {"11a", 11, Tier::fast, "three-pile solve matches the xor rule", check_nim_vs_xor},
      {"11b", 11, Tier::fast, "equal piles: second player wins in n", check_nim_mirror},
      {"12", 12, Tier::fast, "3x3 peg board", check_peg},
      {"13a", 13, Tier::fast, "opening move count", check_chess_moves},
      {"13b", 13, Tier::fast, "position invariants on sampled vertices", check_chess_invariants},
      {"13c", 13, Tier::fast, "mate in one", check_chess_mate_in_one},
      {"13d", 13, Tier::fast, "2x4 fortress is drawn", check_chess_2x4_draw},
      {"14", 14, Tier::fast, "three-player coalition analysis", check_truel},
      {"15", 15, Tier::fast, "order-713 circulant profile and diameter", check_circulant},
      {"16a", 16, Tier::fast, "random games: solver vs history minimax", check_random_games},
      {"16b", 16, Tier::fast, "random connected hosts: full factorial reach",
       check_folklore_count},
      {"16c", 16, Tier::fast, "displacement bound on random pairs", check_gamma_bound_random},
      {"16d", 16, Tier::fast, "spanning paths on all small connected hosts",
       check_hamiltonian_hosts},
  };
  return checks;
}

}  // namespace godgraph::checks
