#pragma once

#include <cstdint>
#include <string>

#include "hrmc/errors.hpp"

namespace hrmc {

// The least number of colors for which a scenario is realizable, or
// "infinite" when no number of colors works.
class KValue {
 public:
  static KValue finite(std::int64_t v);
  static KValue infinite() { return KValue(-1); }

  bool is_infinite() const { return v_ < 0; }
  bool is_finite() const { return v_ >= 0; }
  std::int64_t value() const;

  friend bool operator==(KValue, KValue) = default;
  std::string to_string() const;

 private:
  explicit KValue(std::int64_t v) : v_(v) {}
  std::int64_t v_;
};

// floor(sqrt(x)), exact for every x.
std::uint64_t isqrt(std::uint64_t x);

// Least color count with no attackers and m failures: a component must
// survive every m-subset, which happens iff some vertex is out of reach,
// i.e. n > m; one color then suffices.
KValue k_zero(std::int64_t m, std::int64_t n);

// n^2 + m^2 - 4n - 2mn + 4.  The single-attacker optimum depends only on
// its sign pattern; note the identity D = (n - m - 2)^2 - 4m.
std::int64_t discriminant(std::int64_t m, std::int64_t n);

// Boundaries of that sign pattern as n grows (for fixed m):
//   n1/n2 delimit D < 0 (roots of D = 0),
//   n3/n4 delimit D <= 1 (roots of D = 1);
// realizations with one attacker exist exactly for n > n4.  For m >= 1
// these satisfy n3 < n1 <= n2 < n4.
struct Thresholds {
  double n1, n2, n3, n4;
};

Thresholds thresholds(std::int64_t m);

// Can k colors possibly work for one attacker and m failures on n
// vertices?  Requires k >= 2; the bound is n >= k + m + floor(m/(k-1)) + 2.
bool feasible(std::int64_t k, std::int64_t m, std::int64_t n);

// Least color count for one attacker and m >= 1 failures on n vertices:
// infinite iff D <= 1, else floor((n - m - sqrt(D)) / 2) + 1.  Evaluated
// in exact integer arithmetic: floating point would misclassify exactly
// the boundary cases where D or 4m+1 is a perfect square.
KValue k_one(std::int64_t m, std::int64_t n);

// x + floor(m/x): vertices spent on one sacrificial block of size x plus
// the failures it can soak up, the quantity the cheapest realization
// minimizes.
std::int64_t f_pad(std::int64_t x, std::int64_t m);

// Least n carrying any single-attacker realization for m failures, and
// the block size delta that attains it.
struct MinimizerResult {
  std::int64_t n_m;
  std::int64_t delta_m;

  friend bool operator==(MinimizerResult, MinimizerResult) = default;
};

MinimizerResult min_n(std::int64_t m);

// Necessary conditions on any single-attacker realization whose graph has
// max degree delta:  n >= delta + m + floor(m/(k-1)) + 3  and
// n >= delta + m + floor(m/delta) + 3.  Used to prune the brute-force
// search.  Requires k >= 2, delta >= 1, m >= 1.
bool claim_bounds(std::int64_t n, std::int64_t m, std::int64_t k,
                  std::int64_t delta);

}  // namespace hrmc
