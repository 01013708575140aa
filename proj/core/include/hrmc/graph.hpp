#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <utility>
#include <vector>

#include "hrmc/errors.hpp"

namespace hrmc {

using Vertex = int;

// A subset of the vertices 0..n-1 of some graph, stored as a bit mask.
// Everything in this library is capped at 64 vertices: the exhaustive
// checks walk C(n, m)-sized subset spaces, which stop being tractable
// long before the cap does.
struct VertexSet {
  std::uint64_t bits = 0;

  static constexpr int max_vertices = 64;

  // {0, 1, ..., n-1}
  static VertexSet range(int n) {
    return {n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1};
  }

  static VertexSet of(std::initializer_list<Vertex> vs) {
    VertexSet s;
    for (Vertex v : vs) s.add(v);
    return s;
  }

  bool contains(Vertex v) const {
    return v >= 0 && v < max_vertices && (bits >> v & 1);
  }

  VertexSet& add(Vertex v) {
    check_range(v);
    bits |= std::uint64_t{1} << v;
    return *this;
  }

  VertexSet& remove(Vertex v) {
    check_range(v);
    bits &= ~(std::uint64_t{1} << v);
    return *this;
  }

  int count() const { return std::popcount(bits); }
  bool is_empty() const { return bits == 0; }
  bool is_subset_of(VertexSet o) const { return (bits & ~o.bits) == 0; }

  // Smallest member; undefined on the empty set.
  Vertex smallest() const { return std::countr_zero(bits); }

  VertexSet operator|(VertexSet o) const { return {bits | o.bits}; }
  VertexSet operator&(VertexSet o) const { return {bits & o.bits}; }
  // set difference
  VertexSet operator-(VertexSet o) const { return {bits & ~o.bits}; }

  friend bool operator==(VertexSet, VertexSet) = default;

  // Lexicographic order of the ascending member lists, e.g.
  // {0,5} < {1,2} because [0,5] < [1,2].  For equal-size sets this is
  // the order the enumeration routines produce subsets in.
  static bool lex_less(VertexSet a, VertexSet b);

  std::vector<Vertex> to_vector() const;

  // iterates members in ascending order
  class iterator {
   public:
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    explicit iterator(std::uint64_t rest) : rest_(rest) {}
    Vertex operator*() const { return std::countr_zero(rest_); }
    iterator& operator++() {
      rest_ &= rest_ - 1;
      return *this;
    }
    iterator operator++(int) {
      iterator t = *this;
      ++*this;
      return t;
    }
    friend bool operator==(const iterator&, const iterator&) = default;

   private:
    std::uint64_t rest_ = 0;
  };

  iterator begin() const { return iterator(bits); }
  iterator end() const { return iterator(0); }

 private:
  static void check_range(Vertex v) {
    if (v < 0 || v >= max_vertices)
      throw input_error("vertex out of range [0, 64)");
  }
};

// Simple undirected graph on vertices 0..n-1.  No self-loops, no
// duplicate edges.
class Graph {
 public:
  explicit Graph(int n);

  int vertex_count() const { return n_; }
  int edge_count() const { return edges_; }
  VertexSet vertices() const { return VertexSet::range(n_); }

  void add_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const;

  VertexSet neighbors(Vertex u) const;
  int degree(Vertex u) const;
  int max_degree() const;

  // edges as (u, v) with u < v, sorted
  std::vector<std::pair<Vertex, Vertex>> edge_list() const;

  static Graph complete(int n);

 private:
  void check_vertex(Vertex v) const;

  int n_ = 0;
  int edges_ = 0;
  std::vector<std::uint64_t> adj_;
};

// s together with every neighbor of a member of s
VertexSet closed_neighborhood(const Graph& g, VertexSet s);

// Connected components, each as a vertex set, ordered by smallest member.
std::vector<VertexSet> components(const Graph& g);

// delete_vertices relabels the survivors to 0..n'-1 (keeping their
// relative order); to_original maps a new label back to the old one.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_original;
};

InducedSubgraph delete_vertices(const Graph& g, VertexSet s);

}  // namespace hrmc
