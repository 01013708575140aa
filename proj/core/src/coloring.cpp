#include "hrmc/coloring.hpp"

#include <string>

#include "kernel.hpp"

namespace hrmc {

std::vector<Color> ColorSet::to_vector() const {
  std::vector<Color> out;
  out.reserve(static_cast<std::size_t>(count()));
  std::uint32_t rest = bits;
  while (rest) {
    out.push_back(std::countr_zero(rest) + 1);
    rest &= rest - 1;
  }
  return out;
}

Multicoloring::Multicoloring(int k, std::vector<ColorSet> sets)
    : k_(k), sets_(std::move(sets)) {
  if (k < 1 || k > ColorSet::max_colors)
    throw input_error("color count must be in [1, 32], got " +
                      std::to_string(k));
  const std::uint32_t allowed = ColorSet::range(k).bits;
  for (std::size_t v = 0; v < sets_.size(); ++v)
    if (sets_[v].bits & ~allowed)
      throw input_error("vertex " + std::to_string(v) +
                        " holds a color above k = " + std::to_string(k));
}

ColorSet Multicoloring::at(Vertex v) const {
  if (v < 0 || v >= size())
    throw input_error("vertex " + std::to_string(v) + " out of range [0, " +
                      std::to_string(size()) + ")");
  return sets_[static_cast<std::size_t>(v)];
}

CheckReport check_a_hr(const Graph& g, const Multicoloring& c, int a) {
  if (c.size() != g.vertex_count())
    throw input_error("coloring covers " + std::to_string(c.size()) +
                      " vertices but the graph has " +
                      std::to_string(g.vertex_count()));
  if (a < 0 || a > g.vertex_count())
    throw input_error("attacker count must be in [0, n], got " +
                      std::to_string(a));

  std::vector<std::uint64_t> adj;
  std::vector<std::uint32_t> col;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    adj.push_back(g.neighbors(v).bits);
    col.push_back(c.at(v).bits);
  }
  const detail::Flat f{g.vertex_count(), c.full().bits, adj, col,
                       g.vertices().bits};

  CheckReport report;
  std::uint64_t offender = 0;
  if (detail::hr_violating_set(f, a, &offender, &report.pairs_examined)) {
    report.verdict = Verdict::fail;
    report.condition = FailedCondition::hr;
    report.witness = Witness{VertexSet{offender}, VertexSet{}};
  }
  return report;
}

Multicoloring saturate_coloring(const Graph& g, const Multicoloring& c) {
  if (c.size() != g.vertex_count())
    throw input_error("coloring covers " + std::to_string(c.size()) +
                      " vertices but the graph has " +
                      std::to_string(g.vertex_count()));
  const int k = c.color_count();
  std::vector<ColorSet> sets;
  sets.reserve(static_cast<std::size_t>(c.size()));
  for (Vertex v = 0; v < c.size(); ++v) {
    ColorSet s = c.at(v);
    if (s.count() == k)
      throw input_error("vertex " + std::to_string(v) +
                        " already holds all " + std::to_string(k) +
                        " colors; nothing is hidden from it");
    std::uint32_t missing = c.full().bits & ~s.bits;
    while (s.count() < k - 1) {
      // smallest missing color
      s.bits |= missing & (~missing + 1);
      missing &= missing - 1;
    }
    sets.push_back(s);
  }
  return {k, std::move(sets)};
}

Multicoloring extend_k(const Graph& g, const Multicoloring& c) {
  if (c.size() != g.vertex_count())
    throw input_error("coloring covers " + std::to_string(c.size()) +
                      " vertices but the graph has " +
                      std::to_string(g.vertex_count()));
  const int k = c.color_count();
  if (k + 1 > ColorSet::max_colors)
    throw input_error("cannot extend beyond 32 colors");
  std::vector<ColorSet> sets;
  sets.reserve(static_cast<std::size_t>(c.size()));
  for (Vertex v = 0; v < c.size(); ++v) {
    ColorSet s = c.at(v);
    s.add(k + 1);
    sets.push_back(s);
  }
  return {k + 1, std::move(sets)};
}

}  // namespace hrmc
