#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "comaxg/comax_graph.hpp"

namespace comaxg {

/// DOT with vertex labels like "S7 (|H|=4)".
std::string to_dot(const ComaxGraph& graph);

nlohmann::json to_json(const GraphMetrics& metrics);

/// {group_label, variant, vertices:[{id, order}], edges:[[u, v], ...], metrics:{...}}
/// with edge endpoints given as subgroup ids.
nlohmann::json to_json(const ComaxGraph& graph);

}  // namespace comaxg
