#pragma once

#include <cstdint>
#include <optional>

#include "hrmc/graph.hpp"

namespace hrmc {

enum class Verdict {
  pass,
  fail,
  // a or m exceeds the vertex count, so the required attacker/failure
  // sets cannot exist at all
  vacuous_fail,
};

enum class FailedCondition {
  none,
  hr,          // some a attackers jointly hold every color
  resistance,  // some (A, M) leaves no component holding every color
};

// For a failed check: the lexicographically least offending pair, as
// ascending vertex lists compared elementwise.  A hiding witness has an
// empty failure set.
struct Witness {
  VertexSet attackers;
  VertexSet failures;
};

struct CheckReport {
  Verdict verdict = Verdict::pass;
  FailedCondition condition = FailedCondition::none;
  std::optional<Witness> witness;
  // How many candidate configurations the decision phase evaluated;
  // exact meaning depends on the enumeration strategy.
  std::uint64_t pairs_examined = 0;

  bool passed() const { return verdict == Verdict::pass; }
};

}  // namespace hrmc
