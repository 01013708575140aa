#pragma once

#include "hrmc/coloring.hpp"
#include "hrmc/graph.hpp"
#include "hrmc/kformula.hpp"
#include "hrmc/resistance.hpp"

namespace hrmc {

// A graph, a coloring of it, and the scenario they are claimed to
// withstand.
struct Realization {
  Graph graph;
  Multicoloring coloring;
  Scenario scenario;
};

// The optimal single-attacker construction: with k = k_one(m, n) colors,
// pack n vertices into floor(n/k) disjoint k-cliques plus one smaller
// clique for the leftovers; inside each block the i-th vertex misses
// exactly color i+1.  Throws infeasible_error (citing the threshold
// n4(m)) when n is too small to carry any realization.
Realization build_clique_realization(std::int64_t m, std::int64_t n);

// One more vertex, isolated, wearing the same colors as vertex 0; keeps
// the scenario and the color count.
Realization extend_n(const Realization& r);

}  // namespace hrmc
