// Command-line front end: generate game graphs, solve them, and re-run the
// built-in reference checks.

#include <cctype>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "godgraph/checks.hpp"
#include "godgraph/chess.hpp"
#include "godgraph/coalition.hpp"
#include "godgraph/families.hpp"
#include "godgraph/graph.hpp"
#include "godgraph/graph_io.hpp"
#include "godgraph/oracle.hpp"
#include "godgraph/solitaire.hpp"
#include "godgraph/solver.hpp"
#include "godgraph/util.hpp"

namespace {

using godgraph::GameGraph;
using godgraph::GenOptions;
using nlohmann::json;

struct CommonOpts {
  int threads = 1;
  bool no_labels = false;

  GenOptions gen() const {
    GenOptions o;
    o.threads = threads;
    o.with_labels = !no_labels;
    return o;
  }
};

void add_common(CLI::App* sub, CommonOpts& c) {
  sub->add_option("--threads", c.threads, "worker threads for generation")
      ->check(CLI::Range(1, 64));
  sub->add_flag("--no-labels", c.no_labels, "skip vertex labels to save memory");
}

// An input is either a path to a graph JSON file or a family spec string
// such as "transposition:cycle:6" or "chess:4x3:k..q/..../K..Q w".
GameGraph load_input(const std::string& input, const GenOptions& opts) {
  const bool looks_like_file =
      input.size() > 5 && input.compare(input.size() - 5, 5, ".json") == 0;
  if (looks_like_file || std::filesystem::exists(input)) return godgraph::load_graph_json(input);
  if (input.rfind("chess:", 0) == 0)
    return godgraph::gen_chess_graph(godgraph::parse_board(input.substr(6)), opts);
  return godgraph::generate_from_spec(input, opts);
}

void write_out(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw godgraph::SpecError("cannot write " + out_path);
  f << text << "\n";
}

json vertex_names(const GameGraph& g, const std::vector<godgraph::Vertex>& vs) {
  json arr = json::array();
  for (const godgraph::Vertex v : vs) {
    if (g.has_labels())
      arr.push_back(g.label[static_cast<std::size_t>(v)]);
    else
      arr.push_back(v);
  }
  return arr;
}

json solve_to_json(const godgraph::SolveResult& s) {
  json j;
  j["verdict"] = godgraph::verdict_name(s.start_verdict);
  j["god"] = s.god ? json(*s.god) : json(nullptr);
  j["dtmStart"] = s.dtm_start ? json(*s.dtm_start) : json(nullptr);
  j["counts"] = {{"winP0", s.count_win_p0}, {"winP1", s.count_win_p1}, {"draw", s.count_draw}};
  return j;
}

// "--only 1" and "--only 01" name the same check; letter suffixes stay exact.
bool same_check_id(const std::string& a, const std::string& b) {
  const auto strip = [](const std::string& s) {
    std::size_t i = 0;
    while (i + 1 < s.size() && s[i] == '0' && std::isdigit(static_cast<unsigned char>(s[i + 1])))
      ++i;
    return s.substr(i);
  };
  return strip(a) == strip(b);
}

int run_verify(const std::string& tier, const std::vector<std::string>& only, bool list_only) {
  using godgraph::checks::Check;
  using godgraph::checks::Tier;
  int failures = 0;
  int ran = 0;
  for (const Check& c : godgraph::checks::all_checks()) {
    if (!only.empty()) {
      bool wanted = false;
      for (const std::string& id : only)
        if (same_check_id(id, c.id)) wanted = true;
      if (!wanted) continue;
    } else if (tier == "fast" && c.tier != Tier::fast) {
      continue;
    } else if (tier == "slow" && c.tier != Tier::slow) {
      continue;
    }
    if (list_only) {
      std::printf("%-4s %-5s %s\n", c.id.c_str(), c.tier == Tier::fast ? "fast" : "slow",
                  c.name.c_str());
      continue;
    }
    ++ran;
    const auto t0 = std::chrono::steady_clock::now();
    godgraph::checks::Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& ex) {
      out.pass = false;
      out.detail = std::string("exception: ") + ex.what();
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - t0)
                        .count();
    std::printf("[%s] %-4s %s (%lldms)%s%s\n", out.pass ? " OK " : "FAIL", c.id.c_str(),
                c.name.c_str(), static_cast<long long>(ms), out.detail.empty() ? "" : ": ",
                out.detail.c_str());
    std::fflush(stdout);
    if (!out.pass) ++failures;
  }
  if (!list_only)
    std::printf("%d check%s, %d failure%s\n", ran, ran == 1 ? "" : "s", failures,
                failures == 1 ? "" : "s");
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"game-graph generator and solver suite"};
  app.require_subcommand(1);
  std::string input, out_path, format = "json";

  // generate
  auto* gen = app.add_subcommand("generate", "build a graph from a family spec");
  CommonOpts gen_c;
  gen->add_option("spec", input, "family spec, e.g. transposition:cycle:6")->required();
  gen->add_option("--out", out_path, "output file (default stdout)");
  gen->add_option("--format", format, "json|dot|csv")->check(CLI::IsMember({"json", "dot", "csv"}));
  add_common(gen, gen_c);

  // export
  auto* exp = app.add_subcommand("export", "re-emit a graph in another format");
  CommonOpts exp_c;
  exp->add_option("input", input, "graph JSON file or family spec")->required();
  exp->add_option("--format", format, "json|dot|csv")->check(CLI::IsMember({"json", "dot", "csv"}));
  exp->add_option("--out", out_path, "output file (default stdout)");
  add_common(exp, exp_c);

  // solve
  auto* solve = app.add_subcommand("solve", "backward-induction solve of a two-player graph");
  CommonOpts solve_c;
  std::string strategy_path;
  solve->add_option("input", input, "graph JSON file or family spec")->required();
  solve->add_option("--emit-strategy", strategy_path,
                    "write the winner's verified strategy restriction (or a draw "
                    "strategy for the first player) as graph JSON");
  add_common(solve, solve_c);

  // solve-solitaire
  auto* sol = app.add_subcommand("solve-solitaire", "shortest play into the win set");
  CommonOpts sol_c;
  sol->add_option("input", input, "graph JSON file or family spec")->required();
  add_common(sol, sol_c);

  // profile
  auto* prof = app.add_subcommand("profile", "breadth-first distance profile");
  CommonOpts prof_c;
  std::int64_t source = -1;
  std::string mode = "forward";
  prof->add_option("input", input, "graph JSON file or family spec")->required();
  prof->add_option("--source", source, "source vertex id (default: the start vertex)");
  prof->add_option("--mode", mode, "forward|undirected")
      ->check(CLI::IsMember({"forward", "undirected"}));
  add_common(prof, prof_c);

  // antipodal
  auto* anti = app.add_subcommand("antipodal", "vertices farthest from the start");
  CommonOpts anti_c;
  anti->add_option("input", input, "graph JSON file or family spec")->required();
  anti->add_option("--mode", mode, "forward|undirected")
      ->check(CLI::IsMember({"forward", "undirected"}));
  add_common(anti, anti_c);

  // coalitions
  auto* coal = app.add_subcommand("coalitions", "winning coalitions of a multiplayer graph");
  CommonOpts coal_c;
  std::string example;
  std::uint64_t budget = 1u << 20;
  coal->add_option("input", input, "graph JSON file or family spec");
  coal->add_option("--example", example, "built-in example graph")
      ->check(CLI::IsMember({"truel"}));
  coal->add_option("--budget", budget, "joint-strategy enumeration budget");
  add_common(coal, coal_c);

  // oracle
  auto* ora = app.add_subcommand("oracle", "independent reference computations");
  ora->require_subcommand(1);
  int fs_pegs = 4, fs_disks = 1;
  auto* fs = ora->add_subcommand("frame-stewart", "presumed-optimal multi-peg move count");
  fs->add_option("--pegs", fs_pegs)->required()->check(CLI::Range(3, 16));
  fs->add_option("--disks", fs_disks)->required()->check(CLI::Range(0, 40));
  std::vector<int> nim_piles;
  bool nim_misere = false;
  auto* nim = ora->add_subcommand("nim", "first-player verdict by the xor rule");
  nim->add_option("--piles", nim_piles)->required()->delimiter(',');
  nim->add_flag("--misere", nim_misere, "last move loses");
  CommonOpts ham_c;
  auto* ham = ora->add_subcommand("hamiltonian", "search for a spanning path");
  ham->add_option("input", input, "graph JSON file or family spec")->required();
  add_common(ham, ham_c);
  CommonOpts dih_c;
  auto* dih = ora->add_subcommand("dihedral", "label orbit sizes under rotation/reflection");
  dih->add_option("input", input, "graph JSON file or family spec")->required();
  add_common(dih, dih_c);

  // verify-paper
  auto* verify = app.add_subcommand("verify-paper",
                                    "re-run the built-in reference checks the suite was "
                                    "frozen against");
  verify->alias("verify");
  std::string tier = "fast";
  std::vector<std::string> only;
  bool list_only = false;
  verify->add_option("tier", tier, "fast|slow|all (default fast)")
      ->check(CLI::IsMember({"fast", "slow", "all"}));
  verify->add_option("--only", only, "run only these check ids");
  verify->add_flag("--list", list_only, "list checks without running them");

  CLI11_PARSE(app, argc, argv);

  try {
    if (gen->parsed() || exp->parsed()) {
      const CommonOpts& c = gen->parsed() ? gen_c : exp_c;
      const GameGraph g = load_input(input, c.gen());
      std::cerr << g.vertex_count() << " vertices, " << g.arc_count() << " arcs\n";
      write_out(export_graph(g, godgraph::parse_export_format(format)), out_path);
    } else if (solve->parsed()) {
      const GameGraph g = load_input(input, solve_c.gen());
      const godgraph::SolveResult s = godgraph::solve_retrograde(g);
      json j = solve_to_json(s);
      if (!strategy_path.empty()) {
        const bool drawn = s.start_verdict == godgraph::Verdict::DRAW;
        const int side = drawn ? 0 : static_cast<int>(s.start_verdict);
        const auto kind = drawn ? godgraph::StrategyKind::draw : godgraph::StrategyKind::win;
        const GameGraph strat = godgraph::extract_strategy(g, s, side, kind);
        const godgraph::StrategyCheck chk =
            godgraph::verify_strategy(g, strat, side, kind, drawn ? std::nullopt : s.god);
        if (!chk.ok) throw godgraph::SpecError("strategy verification failed: " + chk.reason);
        std::ofstream f(strategy_path, std::ios::binary);
        if (!f) throw godgraph::SpecError("cannot write " + strategy_path);
        f << godgraph::graph_to_json(strat) << "\n";
        j["strategy"] = {{"side", side},
                         {"kind", drawn ? "draw" : "win"},
                         {"verified", true},
                         {"enumeratedPlays", chk.paths}};
      }
      std::cout << j.dump(2) << "\n";
    } else if (sol->parsed()) {
      const GameGraph g = load_input(input, sol_c.gen());
      const godgraph::SolitaireResult r = godgraph::solve_solitaire(g);
      json j;
      j["solvable"] = r.solvable;
      j["god"] = r.god ? json(*r.god) : json(nullptr);
      j["profile"] = r.profile;
      j["diameterPerComponent"] = r.component_diameters;
      if (r.solvable) j["witness"] = vertex_names(g, r.witness);
      std::cout << j.dump(2) << "\n";
    } else if (prof->parsed()) {
      const GameGraph g = load_input(input, prof_c.gen());
      const godgraph::Vertex src =
          source < 0 ? g.start : static_cast<godgraph::Vertex>(source);
      const auto m = mode == "forward" ? godgraph::Mode::forward : godgraph::Mode::undirected;
      const godgraph::BfsResult r = godgraph::bfs(g, src, m);
      std::int64_t reached = 0;
      for (const std::int64_t x : r.profile) reached += x;
      json j;
      j["source"] = src;
      j["profile"] = r.profile;
      j["eccentricity"] = static_cast<std::int64_t>(r.profile.size()) - 1;
      j["reached"] = reached;
      std::cout << j.dump(2) << "\n";
    } else if (anti->parsed()) {
      const GameGraph g = load_input(input, anti_c.gen());
      const auto m = mode == "forward" ? godgraph::Mode::forward : godgraph::Mode::undirected;
      const auto far = godgraph::antipodal_set(g, g.start, m);
      json j;
      j["source"] = g.start;
      j["antipodal"] = vertex_names(g, far);
      std::cout << j.dump(2) << "\n";
    } else if (coal->parsed()) {
      GameGraph g;
      if (example == "truel")
        g = godgraph::truel_graph();
      else if (!input.empty())
        g = load_input(input, coal_c.gen());
      else
        throw godgraph::SpecError("coalitions needs an input or --example");
      json arr = json::array();
      for (const auto& rep : godgraph::winning_coalitions(g, budget)) {
        json r;
        r["members"] = rep.members;
        r["winning"] = rep.winning;
        r["minimal"] = rep.minimal;
        r["god"] = rep.god ? json(*rep.god) : json(nullptr);
        arr.push_back(std::move(r));
      }
      std::cout << arr.dump(2) << "\n";
    } else if (fs->parsed()) {
      std::cout << godgraph::oracle::frame_stewart(fs_pegs, fs_disks) << "\n";
    } else if (nim->parsed()) {
      std::cout << (godgraph::oracle::nim_first_player_wins(nim_piles, nim_misere) ? "first"
                                                                                   : "second")
                << "\n";
    } else if (ham->parsed()) {
      const GameGraph g = load_input(input, ham_c.gen());
      const auto path = godgraph::oracle::hamiltonian_path(g);
      json j;
      j["found"] = path.has_value();
      if (path) j["path"] = vertex_names(g, *path);
      std::cout << j.dump(2) << "\n";
    } else if (dih->parsed()) {
      const GameGraph g = load_input(input, dih_c.gen());
      if (!g.has_labels()) throw godgraph::SpecError("dihedral orbits need vertex labels");
      json j;
      j["orbitSizes"] = godgraph::oracle::dihedral_orbit_sizes(g.label);
      std::cout << j.dump(2) << "\n";
    } else if (verify->parsed()) {
      return run_verify(tier, only, list_only);
    }
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return 2;
  }
  return 0;
}
