#include "hrmc/kformula.hpp"

#include <cmath>
#include <stdexcept>

namespace hrmc {

namespace {

// Large enough for every real use; keeps every intermediate product and
// square inside int64 / uint64.
constexpr std::int64_t kInputCap = 1'000'000'000;

void check_count(std::int64_t v, const char* what) {
  if (v < 0 || v > kInputCap)
    throw input_error(std::string(what) + " must be in [0, 1e9]");
}

}  // namespace

KValue KValue::finite(std::int64_t v) {
  if (v < 1) throw input_error("a finite color count must be >= 1");
  return KValue(v);
}

std::int64_t KValue::value() const {
  if (is_infinite()) throw std::logic_error("value() on an infinite KValue");
  return v_;
}

std::string KValue::to_string() const {
  return is_infinite() ? "infinite" : std::to_string(v_);
}

std::uint64_t isqrt(std::uint64_t x) {
  if (x == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
  // The double seed is within +-1 of the truth; nudge it exactly.  Clamp
  // first so the squares below cannot wrap.
  if (r > 0xFFFFFFFFull) r = 0xFFFFFFFFull;
  while (r > 0 && r * r > x) --r;
  while (r < 0xFFFFFFFFull && (r + 1) * (r + 1) <= x) ++r;
  return r;
}

KValue k_zero(std::int64_t m, std::int64_t n) {
  check_count(m, "failure count");
  check_count(n, "vertex count");
  return n <= m ? KValue::infinite() : KValue::finite(1);
}

std::int64_t discriminant(std::int64_t m, std::int64_t n) {
  check_count(m, "failure count");
  check_count(n, "vertex count");
  return n * n + m * m - 4 * n - 2 * m * n + 4;
}

Thresholds thresholds(std::int64_t m) {
  check_count(m, "failure count");
  const double md = static_cast<double>(m);
  const double root0 = 2.0 * std::sqrt(md);        // sqrt of 4m
  const double root1 = std::sqrt(4.0 * md + 1.0);  // sqrt of 4m+1
  return {2.0 + md - root0, 2.0 + md + root0, 2.0 + md - root1,
          2.0 + md + root1};
}

bool feasible(std::int64_t k, std::int64_t m, std::int64_t n) {
  check_count(m, "failure count");
  check_count(n, "vertex count");
  if (k < 2) throw input_error("feasibility bound needs k >= 2");
  return n >= k + m + m / (k - 1) + 2;
}

KValue k_one(std::int64_t m, std::int64_t n) {
  check_count(m, "failure count");
  check_count(n, "vertex count");
  if (m < 1) throw input_error("k_one needs m >= 1; use k_zero for m = 0");

  // D <= 1 iff n <= n4 iff nothing is realizable.  With t = n - m - 2 we
  // have D = t*t - 4m, so the test is exact in integers.
  const std::int64_t t = n - m - 2;
  if (t <= 0 || t * t <= 4 * m + 1) return KValue::infinite();

  const std::int64_t d = discriminant(m, n);  // = t*t - 4m >= 2 here
  const auto s = static_cast<std::int64_t>(isqrt(static_cast<std::uint64_t>(d)));
  // floor((n - m - sqrt(D)) / 2): since s <= t - 1, the numerator
  // x - s >= 3 stays positive, and flooring a half-integer only needs a
  // parity nudge when sqrt(D) is irrational.
  const std::int64_t x = n - m;
  const std::int64_t q = (s * s == d) ? (x - s) / 2 : (x - s - 1) / 2;
  return KValue::finite(q + 1);
}

std::int64_t f_pad(std::int64_t x, std::int64_t m) {
  check_count(m, "failure count");
  if (x < 1) throw input_error("block size must be >= 1");
  return x + m / x;
}

MinimizerResult min_n(std::int64_t m) {
  check_count(m, "failure count");
  if (m < 1) throw input_error("min_n needs m >= 1");
  if (m > 2'000'000) throw input_error("failure count too large for min_n");
  // n(delta) = delta + m + floor(m/delta) + 3 is minimized within
  // delta in [1, m+1]; keep the smallest minimizer.
  std::int64_t best_n = 0, best_d = 0;
  for (std::int64_t d = 1; d <= m + 1; ++d) {
    const std::int64_t n = d + m + m / d + 3;
    if (best_d == 0 || n < best_n) {
      best_n = n;
      best_d = d;
    }
  }
  return {best_n, best_d};
}

bool claim_bounds(std::int64_t n, std::int64_t m, std::int64_t k,
                  std::int64_t delta) {
  check_count(n, "vertex count");
  check_count(m, "failure count");
  if (k < 2) throw input_error("claim_bounds needs k >= 2");
  if (delta < 1) throw input_error("claim_bounds needs delta >= 1");
  if (m < 1) throw input_error("claim_bounds needs m >= 1");
  return n >= delta + m + m / (k - 1) + 3 && n >= delta + m + m / delta + 3;
}

}  // namespace hrmc
