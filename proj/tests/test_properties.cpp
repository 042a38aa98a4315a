#include "doctest.h"

#include <algorithm>
#include <random>

#include "godgraph/families.hpp"
#include "godgraph/graph_io.hpp"
#include "godgraph/hosts.hpp"
#include "godgraph/oracle.hpp"
#include "godgraph/perm.hpp"
#include "godgraph/solitaire.hpp"
#include "godgraph/solver.hpp"

using namespace godgraph;

namespace {

GameGraph random_digraph(std::mt19937& rng, int n, double p) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  GameGraph g;
  for (int i = 0; i < n; ++i) g.add_vertex(kSolitaire);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && coin(rng) < p) g.add_edge(u, v);
  g.freeze();
  return g;
}

GameGraph random_alternation_game(std::mt19937& rng, int n) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  GameGraph g;
  g.players = 2;
  for (int v = 0; v < n; ++v) g.add_vertex(coin(rng) < 0.5 ? 0 : 1);
  for (int u = 0; u < n; ++u)
    for (int v = 0; v < n; ++v)
      if (u != v && g.owner[static_cast<std::size_t>(u)] != g.owner[static_cast<std::size_t>(v)] &&
          coin(rng) < 0.3)
        g.add_edge(u, v);
  g.freeze();
  for (int v = 0; v < n; ++v)
    if (g.terminal[static_cast<std::size_t>(v)] && coin(rng) < 0.5) g.set_win(v);
  return g;
}

}  // namespace

TEST_CASE("profile mass equals reached count") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 30; ++trial) {
    const GameGraph g = random_digraph(rng, 4 + static_cast<int>(rng() % 20), 0.12);
    const BfsResult r = bfs(g, 0, Mode::forward);
    std::int64_t mass = 0;
    for (const std::int64_t layer : r.profile) mass += layer;
    std::int64_t reached = 0;
    for (const std::int32_t d : r.dist)
      if (d >= 0) ++reached;
    CHECK(mass == reached);
    CHECK(static_cast<int>(r.profile.size()) - 1 == eccentricity(g, 0, Mode::forward));
  }
}

TEST_CASE("distance to a set is the pointwise minimum") {
  std::mt19937 rng(4242);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 10);
    const GameGraph g = random_digraph(rng, n, 0.2);
    std::vector<Vertex> targets{0, static_cast<Vertex>(n / 2)};
    const auto to_set = distances_to_set(g, targets, Mode::forward);
    for (int v = 0; v < n; ++v) {
      const BfsResult from_v = bfs(g, v, Mode::forward);
      std::int32_t best = -1;
      for (const Vertex t : targets) {
        const std::int32_t d = from_v.dist[static_cast<std::size_t>(t)];
        if (d >= 0 && (best < 0 || d < best)) best = d;
      }
      CHECK(to_set[static_cast<std::size_t>(v)] == best);
    }
  }
}

TEST_CASE("solitaire god agrees with the per-vertex recount") {
  std::mt19937 rng(777);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 14);
    GameGraph g = random_digraph(rng, n, 0.25);
    g.set_win(static_cast<Vertex>(rng() % n));
    if (rng() % 2) g.set_win(static_cast<Vertex>(rng() % n));
    CHECK(god_of_graph(g) == oracle::brute_diameter(g, Mode::forward));

    // The deepest solvable vertex is a different quantity from the god
    // number; both recounts must agree with the stored-graph routes.
    const std::vector<std::int32_t> to_win =
        distances_to_set(g, g.win_vertices(), Mode::forward);
    const int deepest = *std::max_element(to_win.begin(), to_win.end());
    CHECK(deepest == oracle::brute_god_to_win(g));
  }
}

TEST_CASE("implicit search retraces the stored graph") {
  const GameGraph g = gen_sliding(host_grid(3, 2), -1, GenOptions{});
  const BfsResult stored = bfs(g, g.start, Mode::forward);
  const auto encode = [](Vertex v) {
    std::string s(4, '\0');
    for (int i = 0; i < 4; ++i) s[i] = static_cast<char>((v >> (8 * i)) & 0xff);
    return s;
  };
  ImplicitGraph ig;
  ig.start = encode(g.start);
  ig.successors = [&g, &encode](const std::string& bytes) {
    Vertex v = 0;
    for (int i = 3; i >= 0; --i)
      v = (v << 8) | static_cast<Vertex>(static_cast<unsigned char>(bytes[static_cast<std::size_t>(i)]));
    std::vector<std::string> out;
    for (const Vertex s : g.out[static_cast<std::size_t>(v)]) out.push_back(encode(s));
    return out;
  };
  const ImplicitBfsResult r = implicit_bfs(ig, nullptr, "sliding:grid:3x2");
  CHECK(r.profile == stored.profile);
  CHECK(r.reached == 360);
  CHECK(r.eccentricity == static_cast<int>(stored.profile.size()) - 1);
}

TEST_CASE("json round trip is stable on random games") {
  std::mt19937 rng(909);
  for (int trial = 0; trial < 15; ++trial) {
    GameGraph g = random_alternation_game(rng, 4 + static_cast<int>(rng() % 9));
    const std::string once = graph_to_json(g);
    const std::string twice = graph_to_json(graph_from_json(once));
    CHECK(once == twice);
  }
}

TEST_CASE("rank and unrank stay inverse at larger sizes") {
  std::mt19937_64 rng(555);
  for (const int n : {9, 11, 12}) {
    const std::uint64_t total = factorial(n);
    for (int trial = 0; trial < 200; ++trial) {
      const std::uint64_t r = rng() % total;
      CHECK(perm_rank(perm_unrank(n, r)) == r);
    }
  }
}

TEST_CASE("winning random games carry a verifiable strategy") {
  std::mt19937 rng(2024);
  int verified = 0;
  for (int trial = 0; trial < 60 && verified < 20; ++trial) {
    const GameGraph g = random_alternation_game(rng, 4 + static_cast<int>(rng() % 9));
    const SolveResult s = solve_retrograde(g);
    if (s.start_verdict == Verdict::DRAW) continue;
    const int side = static_cast<int>(s.start_verdict);
    const GameGraph strat = extract_strategy(g, s, side, StrategyKind::win);
    const StrategyCheck chk = verify_strategy(g, strat, side, StrategyKind::win, s.god);
    CHECK(chk.ok);
    if (chk.ok) ++verified;
  }
  CHECK(verified >= 10);  // the verdict mix should not be degenerate
}

TEST_CASE("drawn random games carry a verifiable draw strategy") {
  std::mt19937 rng(2025);
  int verified = 0;
  for (int trial = 0; trial < 60 && verified < 20; ++trial) {
    const GameGraph g = random_alternation_game(rng, 4 + static_cast<int>(rng() % 9));
    const SolveResult s = solve_retrograde(g);
    if (s.start_verdict != Verdict::DRAW) continue;
    for (const int side : {0, 1}) {
      const GameGraph strat = extract_strategy(g, s, side, StrategyKind::draw);
      const StrategyCheck chk = verify_strategy(g, strat, side, StrategyKind::draw, std::nullopt);
      CHECK(chk.ok);
    }
    ++verified;
  }
  CHECK(verified >= 10);
}
