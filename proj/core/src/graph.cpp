#include "hrmc/graph.hpp"

#include <string>

namespace hrmc {

bool VertexSet::lex_less(VertexSet a, VertexSet b) {
  // Both member lists are ascending, and all members below the first
  // differing bit are shared, so that bit decides: whichever set holds
  // it has the smaller next element -- unless the other list has simply
  // ended, making it a proper prefix (and therefore smaller).
  if (a.bits == b.bits) return false;
  const Vertex d = std::countr_zero(a.bits ^ b.bits);
  const std::uint64_t from_d = ~std::uint64_t{0} << d;
  if (a.bits >> d & 1) return (b.bits & from_d) != 0;
  return (a.bits & from_d) == 0;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(count());
  for (Vertex v : *this) out.push_back(v);
  return out;
}

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > VertexSet::max_vertices)
    throw input_error("graph size must be in [0, 64], got " +
                      std::to_string(n));
  adj_.assign(static_cast<std::size_t>(n), 0);
}

void Graph::check_vertex(Vertex v) const {
  if (v < 0 || v >= n_)
    throw input_error("vertex " + std::to_string(v) + " out of range [0, " +
                      std::to_string(n_) + ")");
}

void Graph::add_edge(Vertex u, Vertex v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v)
    throw input_error("self-loop at vertex " + std::to_string(u));
  if (has_edge(u, v))
    throw input_error("duplicate edge (" + std::to_string(u) + ", " +
                      std::to_string(v) + ")");
  adj_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
  adj_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
  ++edges_;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  check_vertex(u);
  check_vertex(v);
  return adj_[static_cast<std::size_t>(u)] >> v & 1;
}

VertexSet Graph::neighbors(Vertex u) const {
  check_vertex(u);
  return {adj_[static_cast<std::size_t>(u)]};
}

int Graph::degree(Vertex u) const {
  check_vertex(u);
  return std::popcount(adj_[static_cast<std::size_t>(u)]);
}

int Graph::max_degree() const {
  int best = 0;
  for (const std::uint64_t row : adj_) best = std::max(best, std::popcount(row));
  return best;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edge_list() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (Vertex u = 0; u < n_; ++u) {
    std::uint64_t higher = adj_[static_cast<std::size_t>(u)] >> (u + 1) << (u + 1);
    while (higher) {
      const Vertex v = std::countr_zero(higher);
      higher &= higher - 1;
      out.emplace_back(u, v);
    }
  }
  return out;
}

Graph Graph::complete(int n) {
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) g.add_edge(u, v);
  return g;
}

VertexSet closed_neighborhood(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices()))
    throw input_error("vertex set is not a subset of the graph");
  VertexSet out = s;
  for (Vertex v : s) out = out | g.neighbors(v);
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  std::uint64_t left = g.vertices().bits;
  while (left) {
    const Vertex start = std::countr_zero(left);
    std::uint64_t comp = std::uint64_t{1} << start;
    std::uint64_t frontier = comp;
    while (frontier) {
      std::uint64_t next = 0;
      while (frontier) {
        const Vertex u = std::countr_zero(frontier);
        frontier &= frontier - 1;
        next |= g.neighbors(u).bits;
      }
      next &= left & ~comp;
      comp |= next;
      frontier = next;
    }
    out.push_back({comp});
    left &= ~comp;
  }
  return out;
}

InducedSubgraph delete_vertices(const Graph& g, VertexSet s) {
  if (!s.is_subset_of(g.vertices()))
    throw input_error("vertex set is not a subset of the graph");
  const VertexSet keep = g.vertices() - s;
  std::vector<Vertex> to_original = keep.to_vector();
  std::vector<Vertex> to_new(static_cast<std::size_t>(g.vertex_count()), -1);
  for (std::size_t i = 0; i < to_original.size(); ++i)
    to_new[static_cast<std::size_t>(to_original[i])] = static_cast<Vertex>(i);

  Graph sub(static_cast<int>(to_original.size()));
  for (const auto& [u, v] : g.edge_list())
    if (keep.contains(u) && keep.contains(v))
      sub.add_edge(to_new[static_cast<std::size_t>(u)],
                   to_new[static_cast<std::size_t>(v)]);
  return {std::move(sub), std::move(to_original)};
}

}  // namespace hrmc
