#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "endgraph/graph.hpp"

namespace endgraph {

// A non-negative multiple of 1/2, stored as a count of half-steps.
struct HalfRadius {
    std::int64_t half_steps = 0;

    static HalfRadius whole(std::int64_t r) { return {2 * r}; }
    double value() const { return static_cast<double>(half_steps) / 2.0; }
    friend auto operator<=>(const HalfRadius&, const HalfRadius&) = default;
};

// Parses "3", "2.5" or "5/2". Throws DomainError on anything that is not a
// non-negative half-integer.
HalfRadius parse_half_radius(const std::string& text);
std::string to_string(HalfRadius r);

// Open metric ball {x : d(root, x) < rho} of the path metric (the root is
// always present, so B_0 is the bare root).
//
// Vertex 0 is the root; `depth` holds true graph distances and every other
// vertex has depth < rho. An edge uv is kept whole iff
// depth(u) + depth(v) + 1 < 2 rho; every other edge-end at a ball vertex
// becomes a stub, a self-loop contributing two. Stub lengths are implied by
// depth. The ball type is constant for rho in (m/2, (m+1)/2].
struct Ball {
    HalfRadius radius;
    std::vector<VertexId> ids;
    std::vector<std::int64_t> depth;
    std::vector<std::uint32_t> stubs;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges;  // full edges, u == v for self-loops

    std::size_t vertex_count() const { return ids.size(); }
    std::size_t stub_count() const;
    // Edge-ends inside the ball plus stubs.
    std::vector<std::size_t> degrees() const;
    // Betti number of the full-edge graph; stubs carry no cycles.
    std::int64_t rank() const;
    std::optional<std::uint32_t> index_of(const VertexId& v) const;
};

Ball ball(const GraphOracle& g, HalfRadius radius);
Ball ball(const FiniteMultigraph& g, HalfRadius radius);

// Restriction of a ball to a smaller radius.
Ball truncate(const Ball& b, HalfRadius radius);

// Empty string when all structural invariants hold, else the first violation.
std::string check_invariants(const Ball& b);

// The ball's full-edge graph as a finite multigraph, dropping stubs.
FiniteMultigraph to_graph(const Ball& b, const std::string& name = "ball");

// Graphviz rendering; stubs are drawn as dangling half-edges.
std::string to_dot(const Ball& b);
std::string to_text(const Ball& b);

// Canonical labeling of a ball: `order[i]` is the ball index placed at
// canonical position i. Two balls receive byte-identical codes iff there is a
// root-fixing multigraph isomorphism preserving stub counts.
struct CanonicalForm {
    std::string code;
    std::vector<std::uint32_t> order;
};

CanonicalForm canonical_form(const Ball& b);
std::string canonical_code(const Ball& b);

// Root-fixing isomorphism b1 -> b2 as (vertex of b1, vertex of b2) pairs, or
// nullopt. Throws DomainError when the radii differ.
std::optional<std::vector<std::pair<VertexId, VertexId>>> rooted_isomorphic(const Ball& b1, const Ball& b2);

// d = inf { 2^-r : B_r(g1) = B_r(g2) }, reported as 2^(-m/2).
struct DyadicDistance {
    enum class Kind { Exact, UpperBound, Zero };
    Kind kind = Kind::Exact;
    std::int64_t half_exponent = 0;

    double value() const;
    // e.g. "exact 2^-1/2 0.7071067811865476"
    std::string to_string() const;
    friend bool operator==(const DyadicDistance&, const DyadicDistance&) = default;
};

// Scans radii 0, 1/2, 1, ... up to max_half_steps/2. Zero is reported only
// when both balls are stub-free (whole finite graphs) and isomorphic.
DyadicDistance distance(const GraphOracle& g1, const GraphOracle& g2, std::int64_t max_half_steps);

// Membership of delta in the basic clopen set U_(gamma, r).
bool in_basic_open(const GraphOracle& gamma, HalfRadius r, const GraphOracle& delta);

}  // namespace endgraph
