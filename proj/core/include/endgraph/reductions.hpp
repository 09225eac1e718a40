#pragma once

#include <cstddef>
#include <string>

#include "endgraph/closed_set.hpp"
#include "endgraph/graph.hpp"

namespace endgraph {

// The pruned binary tree of C, rooted at the empty word. Vertex "T<w>" for
// each word w of the tree; edge "e<w>" joins w to its parent.
OraclePtr gamma_star(const ClosedSetSpec& c);

// 3-regular graph whose ends, all accumulated by loops, form C: subdivide
// every edge of gamma_star(C), then hang a lollipop on every degree-2 vertex.
// A singleton presentation yields the loch_ness builtin.
OraclePtr gamma_3(const ClosedSetSpec& c);

// k-regular analogue for k >= 4.
//   odd k:   subdivided tree; (k-3)/2 self-loops at degree 3, a barrel cactus
//            (k-2 parallel edges to a pendant carrying a self-loop) at degree 2;
//   even k:  subdivided tree with every edge doubled; (k-4)/2 self-loops at
//            degree 4, (k-6)/2 at degree 6;
//   k = 4:   the doubled subdivided tree with every degree-6 vertex split by
//            `grouping`.
// A root of degree 1 (one child) gets (k-1)/2 self-loops, or (k-2)/2 after
// doubling, which also covers singleton presentations.
OraclePtr gamma_k(const ClosedSetSpec& c, std::size_t k, EdgeEndGrouping grouping = {});

// Where an emitted vertex of a gamma construction comes from.
struct ConstructionTrace {
    enum class Branch { Tree, Three, Odd, Even, Four, LochNess };
    enum class Role { TreeVertex, Subdivision, Pendant, SplitFirst, SplitSecond, Builtin };
    Branch branch = Branch::Tree;
    Role role = Role::TreeVertex;
    Word word;           // tree word the vertex is attached to
    VertexId host;       // for pendants: the vertex carrying the pendant
    std::string to_string() const;
};

// Decodes a vertex id of gamma_star (k = 0), gamma_3 (k = 3) or gamma_k.
// Throws DomainError for ids the construction never emits.
ConstructionTrace decode_vertex(const ClosedSetSpec& c, std::size_t k, const VertexId& v,
                                EdgeEndGrouping grouping = {});

}  // namespace endgraph
