#include "comaxg/graph_export.hpp"

#include <sstream>

namespace comaxg {

namespace {

nlohmann::json length_json(ExtendedLength length) {
  if (length.is_infinite()) return "inf";
  return length.value();
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

std::string to_dot(const ComaxGraph& graph) {
  std::ostringstream out;
  out << "graph \"" << escape(graph.group_label) << ' ' << to_string(graph.variant) << "\" {\n";
  for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
    out << "  v" << graph.vertices[u] << " [label=\"S" << graph.vertices[u]
        << " (|H|=" << graph.vertex_orders[u] << ")\"];\n";
  }
  for (auto [u, v] : graph.edges()) {
    out << "  v" << graph.vertices[u] << " -- v" << graph.vertices[v] << ";\n";
  }
  out << "}\n";
  return out.str();
}

nlohmann::json to_json(const GraphMetrics& m) {
  return {
      {"vertex_count", m.vertex_count},
      {"edge_count", m.edge_count},
      {"isolated_count", m.isolated_count},
      {"component_count", m.component_count},
      {"component_sizes", m.component_sizes},
      {"component_diameters", m.component_diameters},
      {"diameter_largest_component", m.diameter_largest_component},
      {"girth", length_json(m.girth)},
      {"min_degree", m.min_degree},
      {"is_bipartite", m.is_bipartite},
      {"is_complete", m.is_complete},
      {"is_star", m.is_star},
      {"is_tree", m.is_tree},
      {"universal_vertices", m.universal_vertices},
  };
}

nlohmann::json to_json(const ComaxGraph& graph) {
  nlohmann::json vertices = nlohmann::json::array();
  for (std::size_t u = 0; u < graph.vertex_count(); ++u) {
    vertices.push_back({{"id", graph.vertices[u]}, {"order", graph.vertex_orders[u]}});
  }
  nlohmann::json edges = nlohmann::json::array();
  for (auto [u, v] : graph.edges()) edges.push_back({graph.vertices[u], graph.vertices[v]});
  return {
      {"group_label", graph.group_label},
      {"variant", to_string(graph.variant)},
      {"vertices", std::move(vertices)},
      {"edges", std::move(edges)},
      {"metrics", to_json(metrics(graph))},
  };
}

}  // namespace comaxg
