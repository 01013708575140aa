#pragma once

#include <filesystem>
#include <string>

#include "hrmc/coloring.hpp"
#include "hrmc/graph.hpp"

namespace hrmc {

// On-disk form of a colored graph:
//   { "n": 6, "edges": [[0,1], ...], "k": 2, "colors": [[2], [1], ...] }
// Edges are pairs [u, v] with u < v; colors lists one ascending array of
// integers in [1, k] per vertex.
struct Instance {
  Graph graph;
  Multicoloring coloring;
};

// Both throw input_error naming the offending field and index.
Instance parse_instance(const std::string& json_text);
Instance load_instance(const std::filesystem::path& path);

std::string to_json(const Graph& g, const Multicoloring& c);
void save_instance(const std::filesystem::path& path, const Graph& g,
                   const Multicoloring& c);

// Graphviz rendering: one cluster per connected component, each vertex
// labeled with its name and color set.
std::string to_dot(const Graph& g, const Multicoloring& c);

}  // namespace hrmc
