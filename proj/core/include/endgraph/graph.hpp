#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "endgraph/descriptor.hpp"

namespace endgraph {

using VertexId = std::string;
using EdgeId = std::string;

// One entry of an incident-edge answer. A self-loop is listed once, with
// `other` equal to the queried vertex; it contributes two edge-ends.
struct Incidence {
    EdgeId edge;
    VertexId other;
    bool self_loop = false;

    friend bool operator==(const Incidence&, const Incidence&) = default;
};

// Sum of edge-ends in an incidence list (self-loops count twice).
std::size_t degree_of(const std::vector<Incidence>& incident);

// A lazily presented, connected, locally finite rooted multigraph.
//
// Implementations must be deterministic (same answer, same order, for
// repeated queries) and symmetric (an edge seen at u with opposite v is also
// seen at v with opposite u). They are immutable and may be queried from
// several threads at once.
class GraphOracle {
public:
    virtual ~GraphOracle() = default;

    virtual VertexId root() const = 0;

    // Throws DomainError for an id that is not a vertex of this graph.
    virtual std::vector<Incidence> incident(const VertexId& v) const = 0;

    // Certified (rank, endspace pair) when the construction is descriptor-backed.
    virtual std::optional<StandardGraphDescriptor> descriptor() const { return std::nullopt; }

    // Human-readable construction provenance, e.g. "builtin:loch_ness".
    virtual std::string provenance() const = 0;

    // Number of surgery wrappers stacked on top of a base oracle. Fresh ids
    // minted by a wrapper are namespaced by this depth.
    virtual int patch_depth() const { return 0; }
};

using OraclePtr = std::shared_ptr<const GraphOracle>;

// Explicit finite rooted multigraph with stable vertex and edge ids.
// Vertices and edges keep insertion order, which fixes every derived order.
class FiniteMultigraph {
public:
    struct Endpoints {
        VertexId u;
        VertexId v;
        bool is_loop() const { return u == v; }
    };

    FiniteMultigraph() = default;
    explicit FiniteMultigraph(std::string name) : name_(std::move(name)) {}

    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    void add_vertex(const VertexId& v);
    void add_edge(const EdgeId& e, const VertexId& u, const VertexId& v);
    void remove_edge(const EdgeId& e);
    // The vertex must have no incident edges.
    void remove_vertex(const VertexId& v);

    void set_root(const VertexId& v);
    const std::optional<VertexId>& root() const { return root_; }

    bool has_vertex(const VertexId& v) const { return incidence_.count(v) != 0; }
    bool has_edge(const EdgeId& e) const { return edges_.count(e) != 0; }

    std::size_t vertex_count() const { return vertices_.size(); }
    std::size_t edge_count() const { return edges_.size(); }

    const std::vector<VertexId>& vertices() const { return vertices_; }
    // Edge ids in insertion order.
    std::vector<EdgeId> edge_ids() const;
    const Endpoints& endpoints(const EdgeId& e) const;

    std::vector<Incidence> incident(const VertexId& v) const;
    std::size_t degree(const VertexId& v) const;

    // Unused ids of the form <prefix><n>.
    VertexId fresh_vertex_id(const std::string& prefix) const;
    EdgeId fresh_edge_id(const std::string& prefix) const;

    friend bool operator==(const FiniteMultigraph& a, const FiniteMultigraph& b);

private:
    std::string name_ = "g";
    std::vector<VertexId> vertices_;
    std::vector<EdgeId> edge_order_;
    std::unordered_map<EdgeId, Endpoints> edges_;
    std::unordered_map<VertexId, std::vector<EdgeId>> incidence_;
    std::optional<VertexId> root_;
};

std::size_t degree(const FiniteMultigraph& g, const VertexId& v);
std::size_t degree(const GraphOracle& g, const VertexId& v);

std::size_t component_count(const FiniteMultigraph& g);
bool is_connected(const FiniteMultigraph& g);

// First Betti number |E| - |V| + #components.
std::int64_t rank(const FiniteMultigraph& g);

// Restriction to the connected component of the root.
FiniteMultigraph root_component(const FiniteMultigraph& g);

// Which three of the six ordered edge-ends of a degree-6 vertex go to the
// first half of a split. Ends are ordered as in `incident`, a self-loop
// contributing two consecutive ends.
struct EdgeEndGrouping {
    std::uint8_t first_half_mask = 0b000111;
    bool valid() const;
};

// Pure surgery moves. Each returns a new graph; the input is untouched.
FiniteMultigraph subdivide_edge(const FiniteMultigraph& g, const EdgeId& e);
FiniteMultigraph attach_lollipop(const FiniteMultigraph& g, const VertexId& v);
FiniteMultigraph double_edges(const FiniteMultigraph& g);
FiniteMultigraph add_self_loops(const FiniteMultigraph& g, const VertexId& v, std::size_t m);
FiniteMultigraph split_degree6(const FiniteMultigraph& g, const VertexId& v,
                               EdgeEndGrouping grouping = {});

// In-place variants that report the vertex they create.
namespace surgery {
VertexId subdivide(FiniteMultigraph& g, const EdgeId& e);
VertexId lollipop(FiniteMultigraph& g, const VertexId& v);
// Fresh pendant vertex joined by `parallel` edges and carrying one self-loop.
VertexId barrel_cactus(FiniteMultigraph& g, const VertexId& v, std::size_t parallel);
void self_loops(FiniteMultigraph& g, const VertexId& v, std::size_t m);
std::pair<VertexId, VertexId> split6(FiniteMultigraph& g, const VertexId& v, EdgeEndGrouping grouping);
}  // namespace surgery

// Every vertex within graph distance r of the root has degree k.
bool is_k_regular_within(const GraphOracle& g, std::size_t k, std::size_t r);

// Adapts a rooted finite graph to the oracle interface.
OraclePtr make_oracle(FiniteMultigraph g, std::optional<StandardGraphDescriptor> descriptor = std::nullopt);

// Finite local surgery applied lazily on top of an oracle.
struct OraclePatch {
    std::vector<EdgeId> removed_edges;
    std::vector<VertexId> added_vertices;
    struct Edge {
        EdgeId id;
        VertexId u;
        VertexId v;
    };
    std::vector<Edge> added_edges;
    std::optional<VertexId> new_root;
};

// Wraps `base` with `patch`. `descriptor` is the metadata of the result;
// pass the base descriptor only when the patch is a proper homotopy
// equivalence.
OraclePtr apply_patch(OraclePtr base, OraclePatch patch, std::optional<StandardGraphDescriptor> descriptor,
                      std::string provenance);

// Oracle counterparts of the surgery moves. Fresh ids are namespaced by
// patch depth, so they never collide with base ids.
OraclePtr subdivide_edge(const OraclePtr& g, const VertexId& at, const EdgeId& e);
OraclePtr attach_lollipop(const OraclePtr& g, const VertexId& v);
OraclePtr add_self_loops(const OraclePtr& g, const VertexId& v, std::size_t m);

// Id minted by a patch of the given depth.
std::string patch_id(int depth, const std::string& local);

}  // namespace endgraph
