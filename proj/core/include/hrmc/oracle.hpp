#pragma once

#include <optional>

#include "hrmc/builder.hpp"
#include "hrmc/kformula.hpp"

namespace hrmc {

// Exhaustive search over every labeled graph on n vertices (n <= 7) and
// every saturated coloring, checking each candidate for highly resistant
// behavior.  Independent of the closed forms; exists to validate them.
struct SearchSpec {
  int a = 1;
  int m = 0;
  int n = 0;
  int k_max = 4;
  // Skip graphs whose max degree violates the necessary counting bounds
  // (only ever applied for a = 1, m >= 1, where those bounds are proven).
  bool prune = true;
};

// Least k <= k_max for which some realization exists, else infinite.
// Scans k upward; for one or more attackers k = 1 is skipped (a lone
// vertex in a surviving component would hold the only color, so no
// 1-coloring can hide anything), and with no attackers the all-{1}
// coloring dominates every other 1-coloring.
//
// Restricting to saturated colorings loses nothing for a <= 1: topping a
// coloring up never breaks the single-attacker conditions and never
// un-kills a component.  For a >= 2 saturation can break the a-subset
// condition, so read those answers as optimistic bounds.
KValue brute_force_k(const SearchSpec& spec);

// First realization found at exactly k colors, in deterministic scan
// order, or nothing.
std::optional<Realization> search_witness(const SearchSpec& spec, int k);

}  // namespace hrmc
