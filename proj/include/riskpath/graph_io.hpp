#pragma once

#include <string>
#include <string_view>

#include "riskpath/graph.hpp"

namespace riskpath {

/// Parses a graph from text, auto-detecting JSON (canonical) or a DOT subset.
Dag parse_graph(std::string_view text);

Dag parse_graph_json(std::string_view text);
Dag parse_graph_dot(std::string_view text);

/// Canonical JSON form: edges sorted by id, risks resolved per edge.
/// parse(serialize(g)) reproduces g exactly.
std::string serialize_graph(const Dag& dag);

}  // namespace riskpath
