#include "hrmc/oracle.hpp"

#include <array>
#include <string>
#include <vector>

#include "kernel.hpp"

namespace hrmc {

namespace {

constexpr int kMaxOracleVertices = 7;

struct Candidate {
  std::uint64_t edge_mask = 0;
  // miss[v] = the one color vertex v lacks (saturated colorings only);
  // 0 means the all-{1} coloring used in the k = 1, a = 0 case
  std::array<int, kMaxOracleVertices> miss{};
  int k = 1;
};

void validate(const SearchSpec& s) {
  if (s.n < 0 || s.n > kMaxOracleVertices)
    throw input_error("brute force search supports n in [0, 7], got " +
                      std::to_string(s.n));
  if (s.a < 0 || s.m < 0) throw input_error("scenario counts must be >= 0");
  if (s.k_max < 1 || s.k_max > ColorSet::max_colors)
    throw input_error("k_max must be in [1, 32]");
}

// Edge i of the lexicographic pair list (0,1), (0,2), ..., (n-2, n-1).
std::vector<std::pair<int, int>> pair_table(int n) {
  std::vector<std::pair<int, int>> t;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) t.emplace_back(u, v);
  return t;
}

// Does any candidate with exactly k colors survive the scenario?  Scans
// graphs in edge-mask order, colorings in lexicographic miss-vector
// order, and stops at the first hit.
bool exists_at_k(const SearchSpec& s, int k, Candidate* out) {
  const int n = s.n;
  if (n == 0) return false;
  if (s.a > n || s.m > n) return false;  // no candidate can ever pass
  if (k == 1 && s.a >= 1) return false;

  const auto pairs = pair_table(n);
  const int e = static_cast<int>(pairs.size());

  std::array<std::uint64_t, kMaxOracleVertices> adj{};
  std::array<std::uint32_t, kMaxOracleVertices> col{};
  const std::uint32_t full = ColorSet::range(k).bits;
  const std::uint64_t all = VertexSet::range(n).bits;
  detail::Flat f{n, full, {adj.data(), static_cast<std::size_t>(n)},
                 {col.data(), static_cast<std::size_t>(n)}, all};

  const bool prune = s.prune && s.a == 1 && s.m >= 1 && k >= 2;

  for (std::uint64_t gm = 0; gm < (std::uint64_t{1} << e); ++gm) {
    adj.fill(0);
    for (std::uint64_t rest = gm; rest;) {
      const int i = std::countr_zero(rest);
      rest &= rest - 1;
      adj[static_cast<std::size_t>(pairs[static_cast<std::size_t>(i)].first)] |=
          detail::bit64(pairs[static_cast<std::size_t>(i)].second);
      adj[static_cast<std::size_t>(pairs[static_cast<std::size_t>(i)].second)] |=
          detail::bit64(pairs[static_cast<std::size_t>(i)].first);
    }
    if (prune) {
      int delta = 0;
      for (int v = 0; v < n; ++v)
        delta = std::max(delta, std::popcount(adj[static_cast<std::size_t>(v)]));
      if (delta == 0 || !claim_bounds(n, s.m, k, delta)) continue;
    }

    if (k == 1) {
      // a = 0 here; one coloring dominates all others
      for (int v = 0; v < n; ++v) col[static_cast<std::size_t>(v)] = 1;
      if (detail::highly_resistant_pass(f, s.a, s.m)) {
        if (out) *out = {gm, {}, k};
        return true;
      }
      continue;
    }

    // saturated colorings: vertex v misses exactly color miss[v]
    std::array<int, kMaxOracleVertices> miss{};
    miss.fill(1);
    for (;;) {
      for (int v = 0; v < n; ++v)
        col[static_cast<std::size_t>(v)] =
            full & ~(std::uint32_t{1} << (miss[static_cast<std::size_t>(v)] - 1));
      if (detail::highly_resistant_pass(f, s.a, s.m)) {
        if (out) *out = {gm, miss, k};
        return true;
      }
      int v = n - 1;
      while (v >= 0 && miss[static_cast<std::size_t>(v)] == k) {
        miss[static_cast<std::size_t>(v)] = 1;
        --v;
      }
      if (v < 0) break;
      ++miss[static_cast<std::size_t>(v)];
    }
  }
  return false;
}

Realization materialize(const SearchSpec& s, const Candidate& c) {
  const auto pairs = pair_table(s.n);
  Graph g(s.n);
  for (std::uint64_t rest = c.edge_mask; rest;) {
    const int i = std::countr_zero(rest);
    rest &= rest - 1;
    g.add_edge(pairs[static_cast<std::size_t>(i)].first,
               pairs[static_cast<std::size_t>(i)].second);
  }
  std::vector<ColorSet> sets;
  for (int v = 0; v < s.n; ++v) {
    if (c.k == 1) {
      sets.push_back(ColorSet::of({1}));
    } else {
      ColorSet cs = ColorSet::range(c.k);
      cs.bits &= ~(std::uint32_t{1}
                   << (c.miss[static_cast<std::size_t>(v)] - 1));
      sets.push_back(cs);
    }
  }
  return {std::move(g), Multicoloring(c.k, std::move(sets)),
          Scenario{s.a, s.m}};
}

}  // namespace

KValue brute_force_k(const SearchSpec& spec) {
  validate(spec);
  const int k_lo = spec.a == 0 ? 1 : 2;
  for (int k = k_lo; k <= spec.k_max; ++k)
    if (exists_at_k(spec, k, nullptr)) return KValue::finite(k);
  return KValue::infinite();
}

std::optional<Realization> search_witness(const SearchSpec& spec, int k) {
  validate(spec);
  if (k < 1 || k > spec.k_max) throw input_error("k must be in [1, k_max]");
  Candidate c;
  if (!exists_at_k(spec, k, &c)) return std::nullopt;
  return materialize(spec, c);
}

}  // namespace hrmc
