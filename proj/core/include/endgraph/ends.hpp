#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "endgraph/ball.hpp"

namespace endgraph {

// One connected component of (window minus the open ball B_i), i.e. of the
// subgraph induced on window vertices at depth >= i.
struct ComponentNode {
    std::int64_t parent = -1;  // index into the previous level, -1 at level 0
    std::vector<std::size_t> children;
    VertexId representative;   // shallowest vertex, ties by discovery order
    std::int64_t min_depth = 0;
    std::size_t vertex_count = 0;
    std::size_t edge_count = 0;
    std::int64_t betti = 0;
    // Betti number of this node not carried by any open child; cycles of
    // children that die inside the window are counted here.
    std::int64_t new_cycles = 0;
    // Edge-ends leaving the window from this component.
    std::size_t open_stubs = 0;

    bool open() const { return open_stubs > 0; }
};

struct ComponentTree {
    std::int64_t horizon = 0;
    std::int64_t r_max = 0;
    std::vector<std::vector<ComponentNode>> levels;  // levels[0..r_max]

    // Indices of level-r_max nodes with open stubs.
    std::vector<std::size_t> persistent_branches() const;
};

// The radius-R window: every vertex at depth <= R and every edge among them,
// with stubs for the edge-ends leaving it.
Ball window(const GraphOracle& g, std::int64_t R);

// Throws DomainError unless 0 <= r_max <= R.
ComponentTree component_tree(const GraphOracle& g, std::int64_t r_max, std::int64_t R);
// Same, from a window already computed at horizon R.
ComponentTree component_tree(const Ball& window, std::int64_t R, std::int64_t r_max);

struct BranchProfile {
    std::size_t leaf_level = 0;
    std::size_t leaf_index = 0;
    bool persistent = false;
    // cumulative[i] = sum of new_cycles along the branch up to level i.
    std::vector<std::int64_t> cumulative;
};

// One profile per maximal branch (tree leaf), in level-then-index order.
std::vector<BranchProfile> loop_accumulation_profile(const ComponentTree& t);

// True when the profile still rises within its last `window` levels.
bool still_growing(const BranchProfile& p, std::size_t window);

// Rank of the radius-r ball.
std::int64_t rank_lower_bound(const GraphOracle& g, std::int64_t r);

// All depth-n vertices lie in one component of the depth >= n subgraph of
// the radius-R window. A false answer only means "not witnessed by R".
bool in_V_n(const GraphOracle& g, std::int64_t n, std::int64_t R);

// Smallest R' in [n, R] at which in_V_n holds, if any.
std::optional<std::int64_t> v_n_witness_radius(const GraphOracle& g, std::int64_t n, std::int64_t R);
std::optional<std::int64_t> v_n_witness_radius(const Ball& window, std::int64_t n, std::int64_t R);

std::string to_dot(const ComponentTree& t);

}  // namespace endgraph
