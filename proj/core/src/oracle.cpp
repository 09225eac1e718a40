#include <algorithm>
#include <unordered_set>

#include "endgraph/errors.hpp"
#include "endgraph/graph.hpp"

namespace endgraph {

namespace {

class FiniteOracle final : public GraphOracle {
public:
    FiniteOracle(FiniteMultigraph g, std::optional<StandardGraphDescriptor> d)
        : graph_(std::move(g)), descriptor_(std::move(d)) {
        if (!graph_.root()) throw DomainError("graph '" + graph_.name() + "' has no root");
    }

    VertexId root() const override { return *graph_.root(); }
    std::vector<Incidence> incident(const VertexId& v) const override { return graph_.incident(v); }
    std::optional<StandardGraphDescriptor> descriptor() const override { return descriptor_; }
    std::string provenance() const override { return "finite:" + graph_.name(); }

private:
    FiniteMultigraph graph_;
    std::optional<StandardGraphDescriptor> descriptor_;
};

class PatchedOracle final : public GraphOracle {
public:
    PatchedOracle(OraclePtr base, OraclePatch patch, std::optional<StandardGraphDescriptor> d,
                  std::string provenance)
        : base_(std::move(base)),
          removed_(patch.removed_edges.begin(), patch.removed_edges.end()),
          added_vertices_(patch.added_vertices.begin(), patch.added_vertices.end()),
          root_(patch.new_root.value_or(base_->root())),
          descriptor_(std::move(d)),
          provenance_(std::move(provenance)) {
        for (const auto& e : patch.added_edges) {
            if (e.u == e.v) {
                extra_[e.u].push_back({e.id, e.u, true});
            } else {
                extra_[e.u].push_back({e.id, e.v, false});
                extra_[e.v].push_back({e.id, e.u, false});
            }
        }
    }

    VertexId root() const override { return root_; }

    std::vector<Incidence> incident(const VertexId& v) const override {
        std::vector<Incidence> out;
        if (!added_vertices_.count(v)) {
            for (auto& inc : base_->incident(v))
                if (!removed_.count(inc.edge)) out.push_back(std::move(inc));
        }
        if (auto it = extra_.find(v); it != extra_.end())
            out.insert(out.end(), it->second.begin(), it->second.end());
        return out;
    }

    std::optional<StandardGraphDescriptor> descriptor() const override { return descriptor_; }
    std::string provenance() const override { return provenance_; }
    int patch_depth() const override { return base_->patch_depth() + 1; }

private:
    OraclePtr base_;
    std::unordered_set<EdgeId> removed_;
    std::unordered_set<VertexId> added_vertices_;
    std::unordered_map<VertexId, std::vector<Incidence>> extra_;
    VertexId root_;
    std::optional<StandardGraphDescriptor> descriptor_;
    std::string provenance_;
};

Incidence find_incidence(const GraphOracle& g, const VertexId& at, const EdgeId& e) {
    for (auto& inc : g.incident(at))
        if (inc.edge == e) return inc;
    throw DomainError("unknown edge '" + e + "' at vertex '" + at + "'");
}

}  // namespace

std::string patch_id(int depth, const std::string& local) { return "%" + std::to_string(depth) + ":" + local; }

OraclePtr make_oracle(FiniteMultigraph g, std::optional<StandardGraphDescriptor> descriptor) {
    return std::make_shared<FiniteOracle>(std::move(g), std::move(descriptor));
}

OraclePtr apply_patch(OraclePtr base, OraclePatch patch, std::optional<StandardGraphDescriptor> descriptor,
                      std::string provenance) {
    return std::make_shared<PatchedOracle>(std::move(base), std::move(patch), std::move(descriptor),
                                           std::move(provenance));
}

OraclePtr subdivide_edge(const OraclePtr& g, const VertexId& at, const EdgeId& e) {
    const auto inc = find_incidence(*g, at, e);
    const int depth = g->patch_depth() + 1;
    const VertexId w = patch_id(depth, "s");
    OraclePatch patch;
    patch.removed_edges.push_back(e);
    patch.added_vertices.push_back(w);
    patch.added_edges.push_back({patch_id(depth, "s0"), at, w});
    patch.added_edges.push_back({patch_id(depth, "s1"), w, inc.other});
    return apply_patch(g, std::move(patch), g->descriptor(), g->provenance() + "+subdivide(" + e + ")");
}

OraclePtr attach_lollipop(const OraclePtr& g, const VertexId& v) {
    g->incident(v);
    const int depth = g->patch_depth() + 1;
    const VertexId w = patch_id(depth, "p");
    OraclePatch patch;
    patch.added_vertices.push_back(w);
    patch.added_edges.push_back({patch_id(depth, "c"), v, w});
    patch.added_edges.push_back({patch_id(depth, "o"), w, w});
    return apply_patch(g, std::move(patch), std::nullopt, g->provenance() + "+lollipop(" + v + ")");
}

OraclePtr add_self_loops(const OraclePtr& g, const VertexId& v, std::size_t m) {
    g->incident(v);
    if (m == 0) return g;
    const int depth = g->patch_depth() + 1;
    OraclePatch patch;
    for (std::size_t i = 0; i < m; ++i) patch.added_edges.push_back({patch_id(depth, "o" + std::to_string(i)), v, v});
    return apply_patch(g, std::move(patch), std::nullopt,
                       g->provenance() + "+loops(" + v + "," + std::to_string(m) + ")");
}

}  // namespace endgraph
