#include "hrmc/resistance.hpp"

#include <string>
#include <vector>

#include "kernel.hpp"

namespace hrmc {

namespace {

using detail::CombinationOdometer;
using detail::Flat;

struct FlatStore {
  std::vector<std::uint64_t> adj;
  std::vector<std::uint32_t> col;
};

Flat flatten(const Graph& g, const Multicoloring& c, FlatStore& store) {
  const int n = g.vertex_count();
  store.adj.reserve(static_cast<std::size_t>(n));
  store.col.reserve(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    store.adj.push_back(g.neighbors(v).bits);
    store.col.push_back(c.at(v).bits);
  }
  return {n, c.full().bits, store.adj, store.col, g.vertices().bits};
}

void check_pairing(const Graph& g, const Multicoloring& c) {
  if (c.size() != g.vertex_count())
    throw input_error("coloring covers " + std::to_string(c.size()) +
                      " vertices but the graph has " +
                      std::to_string(g.vertex_count()));
}

void check_scenario(Scenario s) {
  if (s.a < 0 || s.m < 0) throw input_error("scenario counts must be >= 0");
}

}  // namespace

CheckReport check_am_resistant(const Graph& g, const Multicoloring& c,
                               Scenario s, CheckOptions opts) {
  check_pairing(g, c);
  check_scenario(s);
  const int n = g.vertex_count();
  if (s.a > n || s.m > n)
    return {Verdict::vacuous_fail, FailedCondition::none, std::nullopt, 0};

  FlatStore store;
  const Flat f = flatten(g, c, store);
  CheckReport report;

  int pool[64];
  const int pn = detail::collect(f.all, pool);
  for (CombinationOdometer ao(pool, pn, s.a); !ao.done(); ao.advance()) {
    const std::uint64_t a_mask = ao.mask();
    const std::uint64_t n0 = detail::closed_neighborhood_mask(f, a_mask);
    bool fails = false;
    std::uint64_t first_kill = 0;
    switch (opts.strategy) {
      case Strategy::exhaustive:
        fails = detail::attack_fails_pruned(f, n0, s.m, &report.pairs_examined);
        break;
      case Strategy::exhaustive_unpruned:
        fails = detail::attack_fails_unpruned(f, n0, s.m, &first_kill,
                                              &report.pairs_examined);
        break;
      case Strategy::branch:
        fails = detail::attack_fails_branch(f, n0, s.m, &report.pairs_examined);
        break;
    }
    if (fails) {
      // The attacker loop runs in lexicographic order, so this is the
      // least failing A; pair it with its least failing M.
      const std::uint64_t m_mask =
          opts.strategy == Strategy::exhaustive_unpruned
              ? first_kill
              : detail::canonical_failing_m(f, n0, s.m);
      report.verdict = Verdict::fail;
      report.condition = FailedCondition::resistance;
      report.witness = Witness{VertexSet{a_mask}, VertexSet{m_mask}};
      return report;
    }
  }
  report.verdict = Verdict::pass;
  return report;
}

CheckReport check_highly_am_resistant(const Graph& g, const Multicoloring& c,
                                      Scenario s, CheckOptions opts) {
  check_pairing(g, c);
  check_scenario(s);
  const int n = g.vertex_count();
  if (s.a > n || s.m > n)
    return {Verdict::vacuous_fail, FailedCondition::none, std::nullopt, 0};

  CheckReport hr = check_a_hr(g, c, s.a);
  if (!hr.passed()) return hr;

  CheckReport res = check_am_resistant(g, c, s, opts);
  res.pairs_examined += hr.pairs_examined;
  return res;
}

bool witness_reverifies(const Graph& g, const Multicoloring& c, Scenario s,
                        const Witness& w) {
  check_pairing(g, c);
  if (w.attackers.count() != s.a) return false;
  if (!w.attackers.is_subset_of(g.vertices())) return false;

  if (w.failures.is_empty()) {
    // hr-side witness: the attackers alone hold everything
    ColorSet seen;
    for (Vertex v : w.attackers) seen = seen | c.at(v);
    if (seen == c.full()) return true;
  }
  if (w.failures.count() != s.m) return false;
  if (!w.failures.is_subset_of(g.vertices())) return false;

  const VertexSet gone = closed_neighborhood(g, w.attackers) | w.failures;
  const InducedSubgraph sub = delete_vertices(g, gone);
  for (const VertexSet& comp : components(sub.graph)) {
    ColorSet seen;
    for (Vertex v : comp)
      seen = seen | c.at(sub.to_original[static_cast<std::size_t>(v)]);
    if (seen == c.full()) return false;  // a surviving full component
  }
  return true;
}

}  // namespace hrmc
