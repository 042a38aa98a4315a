#include "godgraph/coalition.hpp"

#include <algorithm>

#include "godgraph/util.hpp"

namespace godgraph {

int terminal_payee(const GameGraph& g, Vertex v) {
  if (!g.terminal[static_cast<std::size_t>(v)] || !g.win[static_cast<std::size_t>(v)])
    throw SpecError("payee is defined only for win terminals");
  const int j = g.owner[static_cast<std::size_t>(v)];
  return (j - 1 + g.players) % g.players;
}

namespace {

struct PlayEval {
  bool ok = false;
  int max_p0 = 0;
};

// Walks every maximal simple play under the kept-edge assignment. A play that
// stops anywhere but a win terminal paying a coalition member is a failure.
class PlayWalker {
 public:
  PlayWalker(const GameGraph& g, const std::vector<const std::vector<Vertex>*>& kept,
             std::uint32_t member_mask, std::uint64_t step_budget)
      : g_(g), kept_(kept), members_(member_mask), budget_(step_budget),
        on_path_(g.vertex_count(), 0) {}

  PlayEval run(Vertex start) {
    steps_ = 0;
    return walk(start);
  }

 private:
  PlayEval walk(Vertex v) {
    if (++steps_ > budget_)
      throw SpecError("coalition play enumeration exceeded its budget");
    on_path_[static_cast<std::size_t>(v)] = 1;
    PlayEval r;
    bool any_fresh = false;
    r.ok = true;
    for (const Vertex s : *kept_[static_cast<std::size_t>(v)]) {
      if (on_path_[static_cast<std::size_t>(s)]) continue;
      any_fresh = true;
      const PlayEval sub = walk(s);
      if (!sub.ok) {
        r.ok = false;
        break;
      }
      const int here = sub.max_p0 + (g_.owner[static_cast<std::size_t>(v)] == 0 ? 1 : 0);
      r.max_p0 = std::max(r.max_p0, here);
    }
    if (!any_fresh) {
      // Maximal here: either a true terminal or a play stuck on repeats.
      r.ok = g_.terminal[static_cast<std::size_t>(v)] && g_.win[static_cast<std::size_t>(v)] &&
             ((members_ >> terminal_payee(g_, v)) & 1u) != 0;
      r.max_p0 = 0;
    }
    on_path_[static_cast<std::size_t>(v)] = 0;
    return r;
  }

  const GameGraph& g_;
  const std::vector<const std::vector<Vertex>*>& kept_;
  std::uint32_t members_;
  std::uint64_t budget_;
  std::uint64_t steps_ = 0;
  std::vector<char> on_path_;
};

struct CoalitionOutcome {
  bool winning = false;
  std::optional<int> god;
};

CoalitionOutcome evaluate_coalition(const GameGraph& g, std::uint32_t member_mask,
                                    std::uint64_t budget) {
  CoalitionOutcome out;
  bool any_payee = false;
  for (const Vertex t : g.win_vertices())
    if ((member_mask >> terminal_payee(g, t)) & 1u) any_payee = true;
  if (!any_payee) return out;

  std::vector<Vertex> controlled;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!g.terminal[v] && g.owner[v] >= 0 && ((member_mask >> g.owner[v]) & 1u))
      controlled.push_back(static_cast<Vertex>(v));

  std::uint64_t strategies = 1;
  for (const Vertex v : controlled) {
    const std::uint64_t deg = g.out[static_cast<std::size_t>(v)].size();
    if (deg >= 63) throw SpecError("coalition strategy space too large");
    strategies *= (1ull << deg) - 1;
    if (strategies > budget) throw SpecError("coalition strategy space exceeds the budget");
  }

  // Odometer over nonempty kept-edge subsets of every controlled vertex.
  std::vector<std::uint64_t> choice(controlled.size(), 1);
  std::vector<std::vector<Vertex>> kept_rows(controlled.size());
  std::vector<const std::vector<Vertex>*> kept(g.vertex_count());
  for (std::size_t v = 0; v < g.vertex_count(); ++v) kept[v] = &g.out[v];

  for (;;) {
    for (std::size_t i = 0; i < controlled.size(); ++i) {
      const auto& row = g.out[static_cast<std::size_t>(controlled[i])];
      auto& sel = kept_rows[i];
      sel.clear();
      for (std::size_t b = 0; b < row.size(); ++b)
        if ((choice[i] >> b) & 1u) sel.push_back(row[b]);
      kept[static_cast<std::size_t>(controlled[i])] = &sel;
    }
    PlayWalker walker(g, kept, member_mask, budget * 64);
    const PlayEval r = walker.run(g.start);
    if (r.ok) {
      out.winning = true;
      if (!out.god || r.max_p0 < *out.god) out.god = r.max_p0;
    }

    std::size_t i = 0;
    for (; i < controlled.size(); ++i) {
      const std::uint64_t full =
          (1ull << g.out[static_cast<std::size_t>(controlled[i])].size()) - 1;
      if (choice[i] < full) {
        ++choice[i];
        break;
      }
      choice[i] = 1;
    }
    if (i == controlled.size()) break;
  }
  return out;
}

}  // namespace

std::vector<CoalitionReport> winning_coalitions(const GameGraph& g, std::uint64_t budget) {
  if (g.players < 2) throw SpecError("coalition analysis needs at least two players");
  if (g.players > 20) throw SpecError("too many players for coalition enumeration");
  const std::uint32_t all = (1u << g.players) - 1;
  std::vector<CoalitionOutcome> by_mask(all + 1);
  for (std::uint32_t mask = 1; mask <= all; ++mask)
    by_mask[mask] = evaluate_coalition(g, mask, budget);

  std::vector<CoalitionReport> reports;
  for (std::uint32_t mask = 1; mask <= all; ++mask) {
    CoalitionReport rep;
    for (int p = 0; p < g.players; ++p)
      if ((mask >> p) & 1u) rep.members.push_back(p);
    rep.winning = by_mask[mask].winning;
    rep.god = by_mask[mask].god;
    if (rep.winning) {
      rep.minimal = true;
      // Proper nonempty submasks.
      for (std::uint32_t sub = (mask - 1) & mask; sub != 0; sub = (sub - 1) & mask)
        if (by_mask[sub].winning) rep.minimal = false;
    }
    reports.push_back(std::move(rep));
  }
  std::sort(reports.begin(), reports.end(), [](const CoalitionReport& a, const CoalitionReport& b) {
    if (a.members.size() != b.members.size()) return a.members.size() < b.members.size();
    return a.members < b.members;
  });
  return reports;
}

std::optional<int> coalition_god(const GameGraph& g, const std::vector<int>& members,
                                 std::uint64_t budget) {
  std::uint32_t mask = 0;
  for (const int p : members) {
    if (p < 0 || p >= g.players) throw SpecError("coalition member out of range");
    mask |= 1u << p;
  }
  if (mask == 0) throw SpecError("coalition must be nonempty");
  return evaluate_coalition(g, mask, budget).god;
}

GameGraph truel_graph() {
  GameGraph g;
  g.players = 3;
  const Vertex v = g.add_vertex(0, "choose");
  const Vertex p1 = g.add_vertex(1, "left");
  const Vertex p2 = g.add_vertex(1, "right");
  const Vertex q = g.add_vertex(2, "relay");
  const Vertex t1 = g.add_vertex(2, "pays 1");
  const Vertex t2 = g.add_vertex(0, "pays 2");
  g.add_edge(v, p1);
  g.add_edge(v, p2);
  g.add_edge(p1, t1);
  g.add_edge(p2, q);
  g.add_edge(q, t2);
  g.set_win(t1);
  g.set_win(t2);
  g.start = v;
  g.freeze();
  return g;
}

}  // namespace godgraph
