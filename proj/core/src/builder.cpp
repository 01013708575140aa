#include "hrmc/builder.hpp"

#include <cstdio>
#include <string>
#include <vector>

namespace hrmc {

Realization build_clique_realization(std::int64_t m, std::int64_t n) {
  if (m < 1) throw input_error("builder needs m >= 1");
  if (n < 0 || n > VertexSet::max_vertices)
    throw input_error("builder supports n in [0, 64], got " +
                      std::to_string(n));

  const KValue kv = k_one(m, n);
  if (kv.is_infinite()) {
    char buf[160];
    std::snprintf(buf, sizeof buf,
                  "no realization exists: need n > n4(%lld) = %lld + sqrt(%lld)"
                  " ~ %.4f, got n = %lld",
                  static_cast<long long>(m), static_cast<long long>(m + 2),
                  static_cast<long long>(4 * m + 1), thresholds(m).n4,
                  static_cast<long long>(n));
    throw infeasible_error(buf);
  }
  const int k = static_cast<int>(kv.value());
  const int nn = static_cast<int>(n);

  Graph g(nn);
  std::vector<ColorSet> sets(static_cast<std::size_t>(nn));
  // blocks of k vertices, then the leftover block (possibly empty)
  for (int base = 0; base < nn; base += k) {
    const int size = std::min(k, nn - base);
    for (int i = 0; i < size; ++i) {
      for (int j = i + 1; j < size; ++j) g.add_edge(base + i, base + j);
      ColorSet s = ColorSet::range(k);
      s.bits &= ~(std::uint32_t{1} << i);  // drop color i+1
      sets[static_cast<std::size_t>(base + i)] = s;
    }
  }
  return {std::move(g), Multicoloring(k, std::move(sets)),
          Scenario{1, static_cast<int>(m)}};
}

Realization extend_n(const Realization& r) {
  const int n = r.graph.vertex_count();
  if (n == 0) throw input_error("cannot extend an empty realization");
  if (n + 1 > VertexSet::max_vertices)
    throw input_error("extension would exceed 64 vertices");

  Graph g(n + 1);
  for (const auto& [u, v] : r.graph.edge_list()) g.add_edge(u, v);
  std::vector<ColorSet> sets = r.coloring.assignments();
  sets.push_back(r.coloring.at(0));
  return {std::move(g), Multicoloring(r.coloring.color_count(), std::move(sets)),
          r.scenario};
}

}  // namespace hrmc
