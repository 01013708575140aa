// Acceptance gate: one verdict line per criterion, exit 0 iff every
// criterion in the selected tier holds.
//
//   --tier fast   everything except the expensive tail of the builder
//                 sweep (default developer loop, ~1 min)
//   --tier slow   only that expensive tail (minutes)
//   --tier all    both
//
// Runtime caps are asserted, not aspirational: a criterion that blows its
// budget fails.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <random>
#include <string>
#include <vector>

#include "hrmc/builder.hpp"
#include "hrmc/coloring.hpp"
#include "hrmc/graph.hpp"
#include "hrmc/kformula.hpp"
#include "hrmc/oracle.hpp"
#include "hrmc/resistance.hpp"

using namespace hrmc;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::uint64_t choose(std::uint64_t n, std::uint64_t r) {
  if (r > n) return 0;
  r = std::min(r, n - r);
  std::uint64_t out = 1;
  for (std::uint64_t i = 1; i <= r; ++i) out = out * (n - r + i) / i;
  return out;
}

// Pairs the pruned exhaustive strategy will enumerate on a clique-union
// realization: per attacker, failure sets drawn from outside its block.
std::uint64_t projected_pairs(std::int64_t m, std::int64_t n) {
  const std::int64_t k = k_one(m, n).value();
  const std::int64_t full = n / k * k;
  const std::int64_t l = n - full;
  std::uint64_t pairs = static_cast<std::uint64_t>(n);  // hiding checks
  pairs += static_cast<std::uint64_t>(full) *
           std::max<std::uint64_t>(choose(n - k, m), 1);
  if (l > 0)
    pairs += static_cast<std::uint64_t>(l) *
             std::max<std::uint64_t>(choose(n - l, m), 1);
  return pairs;
}

// Measured throughput on one core is ~6 ns per enumerated pair, so this
// is the cost ceiling that keeps a single instance safely under 60 s.
constexpr std::uint64_t kStrategyBudget = 7'000'000'000ull;
// Instances projected above this run in the slow tier.
constexpr std::uint64_t kFastSliceCap = 200'000'000ull;

struct Line {
  bool pass;
  std::string text;
  double secs;
};

std::vector<Line> g_lines;

void report(bool pass, const std::string& text, double secs) {
  g_lines.push_back({pass, text, secs});
  std::printf("[%s] %s  [%.2f s]\n", pass ? "PASS" : "FAIL", text.c_str(),
              secs);
  std::fflush(stdout);
}

// ---------------------------------------------------------------------
// 1. Flagship numbers.

void criterion1() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string why;

  ok &= k_one(4, 11) == KValue::finite(3);
  ok &= k_one(8, 16) == KValue::finite(4);
  for (std::int64_t n = 0; n <= 15; ++n)
    ok &= k_one(8, n) == KValue::infinite();
  ok &= min_n(8) == MinimizerResult{16, 3};
  if (!ok) why = " -- a golden value came out wrong";

  const double dt = seconds_since(t0);
  if (dt >= 1.0) {
    ok = false;
    why += " -- blew the 1 s budget";
  }
  report(ok, "1. golden values: K(1,4,11)=3, K(1,8,16)=4, K(1,8,<=15) "
             "infinite, cheapest n for m=8 is 16 with block size 3" + why,
         dt);
}

// ---------------------------------------------------------------------
// 2. Builder sweep: every (m, n) with 1 <= m <= 10 and n above the
// threshold up to 40 yields a construction that survives the check at
// exactly the closed-form color count.

void criterion2(bool slow_slice) {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string why;
  int instances = 0, branched = 0;
  double worst = 0;

  for (std::int64_t m = 1; m <= 10 && ok; ++m) {
    for (std::int64_t n = 0; n <= 40 && ok; ++n) {
      if (!k_one(m, n).is_finite()) continue;  // at or below the threshold
      const std::uint64_t projected = projected_pairs(m, n);
      if ((projected > kFastSliceCap) != slow_slice) continue;

      const Realization r = build_clique_realization(m, n);
      if (r.coloring.color_count() != k_one(m, n).value()) {
        ok = false;
        why = " -- color count drifted from the closed form at m=" +
              std::to_string(m) + ", n=" + std::to_string(n);
        break;
      }

      // The literal enumeration is preferred; the branch search (exact,
      // same verdicts/witnesses, validated by criterion 7) covers the few
      // instances the literal count cannot finish inside the cap on one
      // core.
      const Strategy st = projected > kStrategyBudget ? Strategy::branch
                                                      : Strategy::exhaustive;
      if (st == Strategy::branch) ++branched;

      const auto i0 = Clock::now();
      const CheckReport rep =
          check_highly_am_resistant(r.graph, r.coloring, r.scenario, {st});
      const double idt = seconds_since(i0);
      worst = std::max(worst, idt);
      ++instances;

      if (!rep.passed()) {
        ok = false;
        why = " -- check failed at m=" + std::to_string(m) +
              ", n=" + std::to_string(n);
      } else if (idt >= 60.0) {
        ok = false;
        why = " -- instance m=" + std::to_string(m) +
              ", n=" + std::to_string(n) + " took " + std::to_string(idt) +
              " s (cap 60 s)";
      }
    }
  }

  char text[256];
  std::snprintf(text, sizeof text,
                "2. builder sweep m<=10, n<=40, %s slice: %d instances "
                "verified at the closed-form k (%d via branch search, worst "
                "instance %.1f s, cap 60 s)%s",
                slow_slice ? "slow" : "fast", instances, branched, worst,
                why.c_str());
  report(ok, text, seconds_since(t0));
}

// ---------------------------------------------------------------------
// 3. Oracle vs closed form where the oracle is tractable.

void criterion3() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string why;

  for (int m = 1; m <= 2 && ok; ++m)
    for (int n = 4; n <= 7 && ok; ++n) {
      const KValue brute = brute_force_k({.a = 1, .m = m, .n = n, .k_max = 4});
      const KValue formula = k_one(m, n);
      // every finite value in this range is <= 4, so no cap excuses apply
      if (brute != formula) {
        ok = false;
        why = " -- disagreement at m=" + std::to_string(m) +
              ", n=" + std::to_string(n) + ": search says " +
              brute.to_string() + ", formula says " + formula.to_string();
      }
    }
  // the two boundary cells called out by name
  ok &= k_one(1, 5).is_infinite();
  ok &= k_one(2, 7).is_infinite();

  const double dt = seconds_since(t0);
  if (dt >= 600.0) {
    ok = false;
    why += " -- blew the 10 min budget";
  }
  report(ok,
         "3. exhaustive search equals the closed form for m in {1,2}, "
         "n in 4..7, including infinite at (1,5) and the exact-threshold "
         "(2,7)" + why,
         dt);
}

// ---------------------------------------------------------------------
// 4. Zero attackers: formula vs direct argument, and vs the search.

void criterion4() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string why;

  for (std::int64_t m = 1; m <= 20 && ok; ++m)
    for (std::int64_t n = 0; n <= 40 && ok; ++n) {
      const KValue expect =
          n <= m ? KValue::infinite() : KValue::finite(1);
      if (k_zero(m, n) != expect) {
        ok = false;
        why = " -- direct argument mismatch at m=" + std::to_string(m) +
              ", n=" + std::to_string(n);
      }
    }

  // With no attackers, any passing coloring keeps passing when every
  // vertex is recolored to exactly {1}: components and survival do not
  // change, and the color-union requirement only gets easier.  So the
  // k = 1 search is already complete, and the cap costs nothing.
  for (int m = 1; m <= 20 && ok; ++m)
    for (int n = 0; n <= 7 && ok; ++n) {
      const KValue brute = brute_force_k({.a = 0, .m = m, .n = n, .k_max = 1});
      if (brute != k_zero(m, n)) {
        ok = false;
        why = " -- search mismatch at m=" + std::to_string(m) +
              ", n=" + std::to_string(n);
      }
    }

  report(ok,
         "4. zero-attacker count matches the survivor argument (m<=20, "
         "n<=40) and the exhaustive search (n<=7)" + why,
         seconds_since(t0));
}

// ---------------------------------------------------------------------
// 5. Block-size function and threshold inequalities.

void criterion5() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string why;

  // Some integer minimizer of x + floor(m/x) lies in {b, b+1, b+2} where
  // m = b^2 + c, 0 <= c <= 2b, and the function never dips on the way
  // there.  (Ties can extend the minimizing plateau below b, so the claim
  // is asserted for a minimizer inside the window, which is the form the
  // cheapest-realization argument consumes.)
  for (std::int64_t m = 1; m <= 1000 && ok; ++m) {
    std::int64_t fmin = f_pad(1, m);
    for (std::int64_t x = 2; x <= m + 1; ++x) fmin = std::min(fmin, f_pad(x, m));
    const std::int64_t b = static_cast<std::int64_t>(isqrt(m));
    std::int64_t x_hat = 0;
    for (std::int64_t x = b; x <= b + 2; ++x)
      if (f_pad(x, m) == fmin) x_hat = x;
    if (x_hat == 0) {
      ok = false;
      why = " -- no minimizer in {b, b+1, b+2} at m=" + std::to_string(m);
      break;
    }
    for (std::int64_t x = 1; x < x_hat; ++x)
      if (f_pad(x, m) < f_pad(x + 1, m)) {
        ok = false;
        why = " -- dip before the minimizer at m=" + std::to_string(m);
        break;
      }
  }

  for (std::int64_t m = 1; m <= 1'000'000 && ok; ++m) {
    const Thresholds t = thresholds(m);
    if (!(t.n3 < t.n1 && t.n1 <= t.n2 && t.n2 < t.n4)) {
      ok = false;
      why = " -- threshold ordering broke at m=" + std::to_string(m);
    }
    // 1 + floor(2 sqrt(m)) >= sqrt(4m + 1), squared to stay in integers
    const std::int64_t s = static_cast<std::int64_t>(isqrt(4 * m));
    if ((1 + s) * (1 + s) < 4 * m + 1) {
      ok = false;
      why = " -- gap inequality broke at m=" + std::to_string(m);
    }
  }

  const double dt = seconds_since(t0);
  if (dt >= 10.0) {
    ok = false;
    why += " -- blew the 10 s budget";
  }
  report(ok,
         "5. block-size minimizer sits in {b,b+1,b+2} with no earlier dip "
         "(m<=1000); threshold ordering and gap inequality hold (m<=1e6)" +
             why,
         dt);
}

// ---------------------------------------------------------------------
// 6. Closed form == feasibility scan, exactly, at every boundary.

void criterion6() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string why;

  for (std::int64_t m = 1; m <= 50 && ok; ++m)
    for (std::int64_t n = 0; n <= 200 && ok; ++n) {
      // Smallest k >= 2 with n >= k + m + floor(m/(k-1)) + 2.  Beyond
      // k = m + 2 the right side is k + m + 2, strictly growing, so the
      // scan is complete.
      KValue scan = KValue::infinite();
      for (std::int64_t k = 2; k <= m + 2; ++k)
        if (feasible(k, m, n)) {
          scan = KValue::finite(k);
          break;
        }
      if (k_one(m, n) != scan) {
        ok = false;
        why = " -- mismatch at m=" + std::to_string(m) +
              ", n=" + std::to_string(n);
      }
    }

  // perfect-square 4m+1: the threshold is integral and still excluded
  for (std::int64_t j = 1; j * (j + 1) <= 50 && ok; ++j) {
    const std::int64_t m = j * (j + 1);
    const std::int64_t n4 = 2 + m + 2 * j + 1;
    if (!k_one(m, n4).is_infinite() || !k_one(m, n4 + 1).is_finite()) {
      ok = false;
      why = " -- integral threshold mishandled at m=" + std::to_string(m);
    }
  }

  const double dt = seconds_since(t0);
  if (dt >= 5.0) {
    ok = false;
    why += " -- blew the 5 s budget";
  }
  report(ok,
         "6. closed form equals the smallest feasible k (m<=50, n<=200), "
         "integral thresholds excluded exactly" + why,
         dt);
}

// ---------------------------------------------------------------------
// 7. Checker self-consistency.

void criterion7() {
  const auto t0 = Clock::now();
  bool ok = true;
  std::string why;
  int cases = 0, fails_reverified = 0;

  std::mt19937 rng(20240819);
  for (int n = 1; n <= 5 && ok; ++n) {
    const int edge_slots = n * (n - 1) / 2;
    for (int mask = 0; mask < (1 << edge_slots) && ok; ++mask) {
      Graph g(n);
      int bit = 0;
      for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
          if (mask >> bit & 1) g.add_edge(u, v);

      for (int rep = 0; rep < 10 && ok; ++rep) {
        const int k = 2 + static_cast<int>(rng() % 3);
        std::vector<ColorSet> sets;
        for (int v = 0; v < n; ++v) {
          ColorSet s;
          for (int col = 1; col <= k; ++col)
            if (rng() % 2 && s.count() < k - 1) s.add(col);
          sets.push_back(s);
        }
        const Multicoloring c = saturate_coloring(g, Multicoloring(k, sets));
        const Scenario s{static_cast<int>(rng() % 3),
                         static_cast<int>(rng() % 4)};
        ++cases;

        const CheckReport pruned = check_am_resistant(g, c, s);
        const CheckReport raw =
            check_am_resistant(g, c, s, {Strategy::exhaustive_unpruned});
        const CheckReport br =
            check_am_resistant(g, c, s, {Strategy::branch});

        const bool same =
            pruned.verdict == raw.verdict && raw.verdict == br.verdict &&
            pruned.witness.has_value() == raw.witness.has_value() &&
            raw.witness.has_value() == br.witness.has_value() &&
            (!pruned.witness ||
             (pruned.witness->attackers == raw.witness->attackers &&
              pruned.witness->failures == raw.witness->failures &&
              pruned.witness->attackers == br.witness->attackers &&
              pruned.witness->failures == br.witness->failures));
        if (!same) {
          ok = false;
          why = " -- strategies disagreed on a " + std::to_string(n) +
                "-vertex case";
          break;
        }
        if (pruned.witness) {
          ++fails_reverified;
          if (!witness_reverifies(g, c, s, *pruned.witness)) {
            ok = false;
            why = " -- a witness failed replay";
          }
        }
      }
    }
  }

  // extensions of verified realizations stay verified
  int extended = 0;
  for (std::int64_t m = 1; m <= 4 && ok; ++m)
    for (std::int64_t n = 0; n <= 12 && ok; ++n) {
      if (!k_one(m, n).is_finite()) continue;
      const Realization r = build_clique_realization(m, n);

      const Realization grown = extend_n(r);
      if (!check_highly_am_resistant(grown.graph, grown.coloring,
                                     grown.scenario)
               .passed()) {
        ok = false;
        why = " -- adding a vertex broke m=" + std::to_string(m) +
              ", n=" + std::to_string(n);
      }

      const Multicoloring richer = extend_k(r.graph, r.coloring);
      if (!check_highly_am_resistant(r.graph, richer, r.scenario).passed()) {
        ok = false;
        why = " -- adding a color broke m=" + std::to_string(m) +
              ", n=" + std::to_string(n);
      }
      ++extended;
    }

  const double dt = seconds_since(t0);
  if (dt >= 300.0) {
    ok = false;
    why += " -- blew the 5 min budget";
  }
  char text[256];
  std::snprintf(text, sizeof text,
                "7. strategies agree with identical witnesses on %d random "
                "cases (%d fail witnesses replayed); %d extended "
                "realizations re-verified%s",
                cases, fails_reverified, extended, why.c_str());
  report(ok, text, dt);
}

}  // namespace

int main(int argc, char** argv) {
  std::string tier = "all";
  for (int i = 1; i < argc; ++i) {
    if (std::strcmp(argv[i], "--tier") == 0 && i + 1 < argc)
      tier = argv[++i];
    else {
      std::fprintf(stderr, "usage: %s [--tier fast|slow|all]\n", argv[0]);
      return 2;
    }
  }
  if (tier != "fast" && tier != "slow" && tier != "all") {
    std::fprintf(stderr, "unknown tier \"%s\"\n", tier.c_str());
    return 2;
  }

  const bool fast = tier != "slow";
  const bool slow = tier != "fast";

  if (fast) criterion1();
  if (fast) criterion2(false);
  if (slow) criterion2(true);
  if (fast) criterion3();
  if (fast) criterion4();
  if (fast) criterion5();
  if (fast) criterion6();
  if (fast) criterion7();

  int passed = 0;
  for (const Line& l : g_lines) passed += l.pass;
  std::printf("%d of %zu checks passed (%s tier)\n", passed, g_lines.size(),
              tier.c_str());
  return passed == static_cast<int>(g_lines.size()) ? 0 : 1;
}
