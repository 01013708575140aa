#include "hrmc/instance.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"

namespace hrmc {

namespace {

using nlohmann::json;

std::int64_t require_int(const json& j, const std::string& where) {
  if (!j.is_number_integer())
    throw input_error("instance: " + where + " must be an integer");
  return j.get<std::int64_t>();
}

const json& require_array(const json& j, const std::string& where) {
  if (!j.is_array())
    throw input_error("instance: " + where + " must be an array");
  return j;
}

}  // namespace

Instance parse_instance(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw input_error(std::string("instance: ") + e.what());
  }
  if (!j.is_object()) throw input_error("instance: top level must be an object");
  for (const char* key : {"n", "edges", "k", "colors"})
    if (!j.contains(key))
      throw input_error(std::string("instance: missing field \"") + key +
                        "\"");

  const std::int64_t n = require_int(j["n"], "\"n\"");
  if (n < 0 || n > VertexSet::max_vertices)
    throw input_error("instance: \"n\" must be in [0, 64], got " +
                      std::to_string(n));
  const std::int64_t k = require_int(j["k"], "\"k\"");
  if (k < 1 || k > ColorSet::max_colors)
    throw input_error("instance: \"k\" must be in [1, 32], got " +
                      std::to_string(k));

  Graph g(static_cast<int>(n));
  const json& edges = require_array(j["edges"], "\"edges\"");
  std::set<std::pair<std::int64_t, std::int64_t>> seen;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "\"edges\"[" + std::to_string(i) + "]";
    const json& e = require_array(edges[i], where);
    if (e.size() != 2)
      throw input_error("instance: " + where + " must be a pair [u, v]");
    const std::int64_t u = require_int(e[0], where + "[0]");
    const std::int64_t v = require_int(e[1], where + "[1]");
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw input_error("instance: " + where + " = [" + std::to_string(u) +
                        ", " + std::to_string(v) +
                        "]: vertex out of range [0, " + std::to_string(n) +
                        ")");
    if (u >= v)
      throw input_error("instance: " + where + ": endpoints must satisfy u < v");
    if (!seen.insert({u, v}).second)
      throw input_error("instance: " + where + ": duplicate edge");
    g.add_edge(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }

  const json& colors = require_array(j["colors"], "\"colors\"");
  if (static_cast<std::int64_t>(colors.size()) != n)
    throw input_error("instance: \"colors\" must list exactly n = " +
                      std::to_string(n) + " sets, got " +
                      std::to_string(colors.size()));
  std::vector<ColorSet> sets;
  sets.reserve(colors.size());
  for (std::size_t v = 0; v < colors.size(); ++v) {
    const std::string where = "\"colors\"[" + std::to_string(v) + "]";
    const json& cs = require_array(colors[v], where);
    ColorSet s;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      const std::string at = where + "[" + std::to_string(i) + "]";
      const std::int64_t c = require_int(cs[i], at);
      if (c < 1 || c > k)
        throw input_error("instance: " + at + " = " + std::to_string(c) +
                          ": color out of range [1, " + std::to_string(k) +
                          "]");
      if (s.contains(static_cast<Color>(c)))
        throw input_error("instance: " + at + ": duplicate color " +
                          std::to_string(c));
      s.add(static_cast<Color>(c));
    }
    sets.push_back(s);
  }
  return {std::move(g), Multicoloring(static_cast<int>(k), std::move(sets))};
}

Instance load_instance(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in)
    throw input_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_instance(buf.str());
}

std::string to_json(const Graph& g, const Multicoloring& c) {
  if (c.size() != g.vertex_count())
    throw input_error("coloring covers " + std::to_string(c.size()) +
                      " vertices but the graph has " +
                      std::to_string(g.vertex_count()));
  json j;
  j["n"] = g.vertex_count();
  j["edges"] = json::array();
  for (const auto& [u, v] : g.edge_list()) j["edges"].push_back({u, v});
  j["k"] = c.color_count();
  j["colors"] = json::array();
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    j["colors"].push_back(c.at(v).to_vector());
  return j.dump(2) + "\n";
}

void save_instance(const std::filesystem::path& path, const Graph& g,
                   const Multicoloring& c) {
  const std::string text = to_json(g, c);
  std::ofstream out(path);
  if (!out) throw input_error("cannot write " + path.string());
  out << text;
}

std::string to_dot(const Graph& g, const Multicoloring& c) {
  if (c.size() != g.vertex_count())
    throw input_error("coloring covers " + std::to_string(c.size()) +
                      " vertices but the graph has " +
                      std::to_string(g.vertex_count()));
  std::ostringstream out;
  out << "graph hrmc {\n";
  const auto comps = components(g);
  for (std::size_t i = 0; i < comps.size(); ++i) {
    out << "  subgraph cluster_" << i << " {\n";
    for (Vertex v : comps[i]) {
      out << "    v" << v << " [label=\"v" << v << "\\n{";
      bool first = true;
      for (Color col : c.at(v).to_vector()) {
        if (!first) out << ",";
        out << col;
        first = false;
      }
      out << "}\"];\n";
    }
    for (const auto& [u, v] : g.edge_list())
      if (comps[i].contains(u)) out << "    v" << u << " -- v" << v << ";\n";
    out << "  }\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace hrmc
