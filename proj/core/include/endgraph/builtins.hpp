#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "endgraph/graph.hpp"

namespace endgraph::builtins {

// x0 - x1 - x2 - ... rooted at the degree-1 end.
OraclePtr ray();

// The k-regular tree rooted anywhere (k >= 2).
OraclePtr regular_tree(std::size_t k);

// Ray x0 x1 x2 ..., a self-loop at x0, and for i >= 1 a pendant y_i with edge
// x_i y_i and a self-loop at y_i. Every vertex has degree 3.
OraclePtr loch_ness();

// Rank 3, one end: a ray with one self-loop at each of x1, x2, x3.
OraclePtr fig4_first();

// Infinite rank, ends ({1/n} u {0}, {0}): a spine x_i carrying a self-loop
// and a loop-free side ray at every x_i with i >= 1.
OraclePtr fig4_middle();

// Cantor set of ends with a clopen half accumulated by loops: the rooted
// binary tree with a self-loop at every vertex whose word starts with 0.
OraclePtr fig4_cantor();

// Registry lookup: loch_ness, ray, tree3, tree:<k>, fig4_first, fig4_middle,
// fig4_cantor. Throws DomainError for unknown names.
OraclePtr by_name(const std::string& name);

std::vector<std::string> names();

}  // namespace endgraph::builtins
