#include <cstdint>
#include <vector>

#include "doctest.h"
#include "hrmc/coloring.hpp"
#include "hrmc/graph.hpp"
#include "hrmc/kformula.hpp"
#include "hrmc/oracle.hpp"
#include "hrmc/resistance.hpp"

using namespace hrmc;

namespace {

// every subset assignment, not just saturated ones; used to prove the
// saturated search space loses nothing at tiny scale
bool any_full_space_realization(int n, int k, Scenario s) {
  const int edge_slots = n * (n - 1) / 2;
  for (int mask = 0; mask < (1 << edge_slots); ++mask) {
    Graph g(n);
    int bit = 0;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v, ++bit)
        if (mask >> bit & 1) g.add_edge(u, v);

    std::vector<int> pick(static_cast<std::size_t>(n), 0);
    const int choices = 1 << k;
    while (true) {
      std::vector<ColorSet> sets;
      for (int v = 0; v < n; ++v)
        sets.push_back(ColorSet{static_cast<std::uint32_t>(pick[v])});
      if (check_highly_am_resistant(g, Multicoloring(k, sets), s).passed())
        return true;
      int i = 0;
      while (i < n && ++pick[i] == choices) pick[i++] = 0;
      if (i == n) break;
    }
  }
  return false;
}

}  // namespace

TEST_CASE("example searches") {
  CHECK(brute_force_k({.a = 1, .m = 1, .n = 6, .k_max = 4}) ==
        KValue::finite(2));
  CHECK(brute_force_k({.a = 1, .m = 1, .n = 5, .k_max = 4}) ==
        KValue::infinite());
  CHECK(brute_force_k({.a = 0, .m = 2, .n = 3, .k_max = 2}) ==
        KValue::finite(1));
}

TEST_CASE("witness searches") {
  const auto found = search_witness({.a = 1, .m = 1, .n = 6}, 2);
  REQUIRE(found.has_value());
  CHECK(found->graph.vertex_count() == 6);
  CHECK(found->coloring.color_count() == 2);
  CHECK(found->scenario.a == 1);
  CHECK(found->scenario.m == 1);
  CHECK(check_highly_am_resistant(found->graph, found->coloring,
                                  found->scenario)
            .passed());

  CHECK(!search_witness({.a = 1, .m = 1, .n = 5}, 3).has_value());
  // the strict-threshold boundary: n equal to the cutoff is not enough
  CHECK(!search_witness({.a = 1, .m = 2, .n = 7}, 2).has_value());
}

TEST_CASE("searches are deterministic") {
  const auto x = search_witness({.a = 1, .m = 1, .n = 6}, 2);
  const auto y = search_witness({.a = 1, .m = 1, .n = 6}, 2);
  REQUIRE(x.has_value());
  REQUIRE(y.has_value());
  CHECK(x->graph.edge_list() == y->graph.edge_list());
  CHECK(x->coloring.assignments() == y->coloring.assignments());
}

TEST_CASE("degenerate and invalid specs") {
  CHECK(brute_force_k({.a = 1, .m = 1, .n = 0}) == KValue::infinite());
  CHECK(brute_force_k({.a = 0, .m = 1, .n = 0}) == KValue::infinite());
  CHECK_THROWS_AS(brute_force_k({.a = 1, .m = 1, .n = 8}), input_error);
  CHECK_THROWS_AS(brute_force_k({.a = -1, .m = 1, .n = 4}), input_error);
  CHECK_THROWS_AS(brute_force_k({.a = 1, .m = -1, .n = 4}), input_error);
  CHECK_THROWS_AS(brute_force_k({.a = 1, .m = 1, .n = 4, .k_max = 0}),
                  input_error);
  CHECK_THROWS_AS(brute_force_k({.a = 1, .m = 1, .n = 4, .k_max = 33}),
                  input_error);
  CHECK_THROWS_AS(search_witness({.a = 1, .m = 1, .n = 4, .k_max = 4}, 5),
                  input_error);
  CHECK_THROWS_AS(search_witness({.a = 1, .m = 1, .n = 4, .k_max = 4}, 0),
                  input_error);
}

TEST_CASE("pruning only skips losers") {
  for (int n = 2; n <= 5; ++n)
    for (int m = 1; m <= 2; ++m) {
      const KValue pruned = brute_force_k({.a = 1, .m = m, .n = n, .k_max = 4});
      const KValue raw =
          brute_force_k({.a = 1, .m = m, .n = n, .k_max = 4, .prune = false});
      CHECK(pruned == raw);
    }
  // one larger spot check
  CHECK(brute_force_k({.a = 1, .m = 1, .n = 6, .k_max = 3}) ==
        brute_force_k({.a = 1, .m = 1, .n = 6, .k_max = 3, .prune = false}));
}

TEST_CASE("saturated colorings find a realization exactly when any coloring does") {
  for (int n = 1; n <= 4; ++n)
    for (int k = 2; k <= 3; ++k)
      for (int m = 0; m <= 2; ++m) {
        const bool full = any_full_space_realization(n, k, Scenario{1, m});
        const bool sat =
            search_witness({.a = 1, .m = m, .n = n, .k_max = k}, k).has_value();
        CHECK(sat == full);
      }
}
