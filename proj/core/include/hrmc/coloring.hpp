#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "hrmc/errors.hpp"
#include "hrmc/graph.hpp"
#include "hrmc/report.hpp"

namespace hrmc {

using Color = int;

// A set of colors drawn from {1, ..., k}, k <= 32.  Color c occupies
// bit c-1.
struct ColorSet {
  std::uint32_t bits = 0;

  static constexpr int max_colors = 32;

  // {1, ..., k}
  static ColorSet range(int k) {
    return {k >= 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << k) - 1};
  }

  static ColorSet of(std::initializer_list<Color> cs) {
    ColorSet s;
    for (Color c : cs) s.add(c);
    return s;
  }

  bool contains(Color c) const {
    return c >= 1 && c <= max_colors && (bits >> (c - 1) & 1);
  }

  ColorSet& add(Color c) {
    check_range(c);
    bits |= std::uint32_t{1} << (c - 1);
    return *this;
  }

  int count() const { return std::popcount(bits); }
  bool is_empty() const { return bits == 0; }

  ColorSet operator|(ColorSet o) const { return {bits | o.bits}; }
  friend bool operator==(ColorSet, ColorSet) = default;

  // members ascending, 1-based
  std::vector<Color> to_vector() const;

 private:
  static void check_range(Color c) {
    if (c < 1 || c > max_colors) throw input_error("color out of range [1, 32]");
  }
};

// Assigns each vertex of an n-vertex graph a subset of {1, ..., k}.
// Empty subsets are allowed; colors above k are not.
class Multicoloring {
 public:
  Multicoloring(int k, std::vector<ColorSet> sets);

  int color_count() const { return k_; }
  int size() const { return static_cast<int>(sets_.size()); }
  ColorSet at(Vertex v) const;
  const std::vector<ColorSet>& assignments() const { return sets_; }
  ColorSet full() const { return ColorSet::range(k_); }

 private:
  int k_ = 1;
  std::vector<ColorSet> sets_;
};

// Does every set of a vertices miss at least one color jointly?  Fails
// with the lexicographically least offending set as witness (its
// failure part empty).  Requires 0 <= a <= n.
CheckReport check_a_hr(const Graph& g, const Multicoloring& c, int a);

// Tops every vertex up to k-1 colors by adding the smallest missing
// ones.  Rejects colorings where some vertex already holds all k.
Multicoloring saturate_coloring(const Graph& g, const Multicoloring& c);

// Adds a fresh color k+1 to every vertex.
Multicoloring extend_k(const Graph& g, const Multicoloring& c);

}  // namespace hrmc
