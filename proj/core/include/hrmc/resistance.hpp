#pragma once

#include "hrmc/coloring.hpp"
#include "hrmc/graph.hpp"
#include "hrmc/report.hpp"

namespace hrmc {

// a colluding attackers, m failing nodes.
struct Scenario {
  int a = 0;
  int m = 0;
};

enum class Strategy {
  // literal enumeration, failure sets drawn from outside the attackers'
  // closed neighborhood (the default; sound by monotonicity)
  exhaustive,
  // literal enumeration over every failure set; the reference the others
  // are validated against
  exhaustive_unpruned,
  // branch-and-prune search; same verdicts and witnesses, counters count
  // search nodes instead of enumerated pairs
  branch,
};

struct CheckOptions {
  Strategy strategy = Strategy::exhaustive;
};

// Does every attacker set A (|A| = a) and failure set M (|M| = m) leave
// some component of g - (N[A] u M) holding all k colors?  Scenarios with
// a > n or m > n are reported as vacuous failures: the quantifier has no
// valid instantiation.  Verdict, witness and failing pair are identical
// across strategies; only pairs_examined differs.
CheckReport check_am_resistant(const Graph& g, const Multicoloring& c,
                               Scenario s, CheckOptions opts = {});

// The conjunction: check_a_hr first, then check_am_resistant.  The
// report's condition says which side broke.
CheckReport check_highly_am_resistant(const Graph& g, const Multicoloring& c,
                                      Scenario s, CheckOptions opts = {});

// Replays a witness through the public graph operations (delete the
// closed neighborhood and the failure set, split into components, union
// colors) and confirms it breaks the scenario.  Used to cross-check the
// enumeration kernels.
bool witness_reverifies(const Graph& g, const Multicoloring& c, Scenario s,
                        const Witness& w);

}  // namespace hrmc
