#pragma once

#include <string>
#include <string_view>

#include "endgraph/graph.hpp"

namespace endgraph {

// Text form:
//   graph <name> root=<v>
//   v <id>
//   e <id> <u> <v>
std::string to_text(const FiniteMultigraph& g);

// Strict parser for the text form; throws ParseError with line and column.
FiniteMultigraph parse_graph(std::string_view text);

// Graphviz rendering. Each edge is drawn separately, so parallel edges stay
// distinct; self-loops are colored.
std::string to_dot(const FiniteMultigraph& g);

}  // namespace endgraph
