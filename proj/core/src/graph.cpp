#include "endgraph/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <unordered_set>

#include "endgraph/errors.hpp"

namespace endgraph {

std::size_t degree_of(const std::vector<Incidence>& incident) {
    std::size_t d = 0;
    for (const auto& inc : incident) d += inc.self_loop ? 2 : 1;
    return d;
}

void FiniteMultigraph::add_vertex(const VertexId& v) {
    if (has_vertex(v)) throw DomainError("duplicate vertex '" + v + "'");
    vertices_.push_back(v);
    incidence_.emplace(v, std::vector<EdgeId>{});
}

void FiniteMultigraph::add_edge(const EdgeId& e, const VertexId& u, const VertexId& v) {
    if (has_edge(e)) throw DomainError("duplicate edge '" + e + "'");
    if (!has_vertex(u)) throw DomainError("edge '" + e + "' has unknown endpoint '" + u + "'");
    if (!has_vertex(v)) throw DomainError("edge '" + e + "' has unknown endpoint '" + v + "'");
    edges_.emplace(e, Endpoints{u, v});
    edge_order_.push_back(e);
    incidence_[u].push_back(e);
    if (u != v) incidence_[v].push_back(e);
}

void FiniteMultigraph::remove_edge(const EdgeId& e) {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw DomainError("unknown edge '" + e + "'");
    auto drop = [&](const VertexId& x) {
        auto& list = incidence_[x];
        list.erase(std::find(list.begin(), list.end(), e));
    };
    drop(it->second.u);
    if (!it->second.is_loop()) drop(it->second.v);
    edges_.erase(it);
    edge_order_.erase(std::find(edge_order_.begin(), edge_order_.end(), e));
}

void FiniteMultigraph::remove_vertex(const VertexId& v) {
    auto it = incidence_.find(v);
    if (it == incidence_.end()) throw DomainError("unknown vertex '" + v + "'");
    if (!it->second.empty()) throw DomainError("vertex '" + v + "' still has incident edges");
    incidence_.erase(it);
    vertices_.erase(std::find(vertices_.begin(), vertices_.end(), v));
    if (root_ == v) root_.reset();
}

void FiniteMultigraph::set_root(const VertexId& v) {
    if (!has_vertex(v)) throw DomainError("unknown root vertex '" + v + "'");
    root_ = v;
}

std::vector<EdgeId> FiniteMultigraph::edge_ids() const { return edge_order_; }

const FiniteMultigraph::Endpoints& FiniteMultigraph::endpoints(const EdgeId& e) const {
    auto it = edges_.find(e);
    if (it == edges_.end()) throw DomainError("unknown edge '" + e + "'");
    return it->second;
}

std::vector<Incidence> FiniteMultigraph::incident(const VertexId& v) const {
    auto it = incidence_.find(v);
    if (it == incidence_.end()) throw DomainError("unknown vertex '" + v + "'");
    std::vector<Incidence> out;
    out.reserve(it->second.size());
    for (const auto& e : it->second) {
        const auto& ends = edges_.at(e);
        if (ends.is_loop())
            out.push_back({e, v, true});
        else
            out.push_back({e, ends.u == v ? ends.v : ends.u, false});
    }
    return out;
}

std::size_t FiniteMultigraph::degree(const VertexId& v) const { return degree_of(incident(v)); }

VertexId FiniteMultigraph::fresh_vertex_id(const std::string& prefix) const {
    for (std::size_t n = vertices_.size();; ++n) {
        auto id = prefix + std::to_string(n);
        if (!has_vertex(id)) return id;
    }
}

EdgeId FiniteMultigraph::fresh_edge_id(const std::string& prefix) const {
    for (std::size_t n = edges_.size();; ++n) {
        auto id = prefix + std::to_string(n);
        if (!has_edge(id)) return id;
    }
}

bool operator==(const FiniteMultigraph& a, const FiniteMultigraph& b) {
    if (a.name_ != b.name_ || a.root_ != b.root_ || a.vertices_ != b.vertices_ ||
        a.edge_order_ != b.edge_order_)
        return false;
    for (const auto& e : a.edge_order_) {
        const auto& x = a.edges_.at(e);
        const auto& y = b.edges_.at(e);
        if (x.u != y.u || x.v != y.v) return false;
    }
    return true;
}

std::size_t degree(const FiniteMultigraph& g, const VertexId& v) { return g.degree(v); }

std::size_t degree(const GraphOracle& g, const VertexId& v) { return degree_of(g.incident(v)); }

namespace {

std::vector<VertexId> reachable(const FiniteMultigraph& g, const VertexId& start,
                                std::unordered_set<VertexId>& seen) {
    std::vector<VertexId> order{start};
    seen.insert(start);
    for (std::size_t i = 0; i < order.size(); ++i) {
        for (const auto& inc : g.incident(order[i])) {
            if (seen.insert(inc.other).second) order.push_back(inc.other);
        }
    }
    return order;
}

}  // namespace

std::size_t component_count(const FiniteMultigraph& g) {
    std::unordered_set<VertexId> seen;
    std::size_t count = 0;
    for (const auto& v : g.vertices()) {
        if (seen.count(v)) continue;
        reachable(g, v, seen);
        ++count;
    }
    return count;
}

bool is_connected(const FiniteMultigraph& g) { return component_count(g) <= 1; }

std::int64_t rank(const FiniteMultigraph& g) {
    return static_cast<std::int64_t>(g.edge_count()) - static_cast<std::int64_t>(g.vertex_count()) +
           static_cast<std::int64_t>(component_count(g));
}

FiniteMultigraph root_component(const FiniteMultigraph& g) {
    if (!g.root()) throw DomainError("graph '" + g.name() + "' has no root");
    std::unordered_set<VertexId> seen;
    reachable(g, *g.root(), seen);
    FiniteMultigraph out(g.name());
    for (const auto& v : g.vertices())
        if (seen.count(v)) out.add_vertex(v);
    for (const auto& e : g.edge_ids()) {
        const auto& ends = g.endpoints(e);
        if (seen.count(ends.u)) out.add_edge(e, ends.u, ends.v);
    }
    out.set_root(*g.root());
    return out;
}

bool EdgeEndGrouping::valid() const {
    return first_half_mask < 64 && std::popcount(static_cast<unsigned>(first_half_mask)) == 3;
}

namespace surgery {

VertexId subdivide(FiniteMultigraph& g, const EdgeId& e) {
    const auto ends = g.endpoints(e);
    const VertexId w = g.fresh_vertex_id("s");
    g.remove_edge(e);
    g.add_vertex(w);
    g.add_edge(g.fresh_edge_id(e + "."), ends.u, w);
    g.add_edge(g.fresh_edge_id(e + "."), w, ends.v);
    return w;
}

VertexId lollipop(FiniteMultigraph& g, const VertexId& v) { return barrel_cactus(g, v, 1); }

VertexId barrel_cactus(FiniteMultigraph& g, const VertexId& v, std::size_t parallel) {
    if (!g.has_vertex(v)) throw DomainError("unknown vertex '" + v + "'");
    const VertexId w = g.fresh_vertex_id("p");
    g.add_vertex(w);
    for (std::size_t i = 0; i < parallel; ++i) g.add_edge(g.fresh_edge_id("c"), v, w);
    g.add_edge(g.fresh_edge_id("o"), w, w);
    return w;
}

void self_loops(FiniteMultigraph& g, const VertexId& v, std::size_t m) {
    if (!g.has_vertex(v)) throw DomainError("unknown vertex '" + v + "'");
    for (std::size_t i = 0; i < m; ++i) g.add_edge(g.fresh_edge_id("o"), v, v);
}

std::pair<VertexId, VertexId> split6(FiniteMultigraph& g, const VertexId& v, EdgeEndGrouping grouping) {
    if (!grouping.valid()) throw DomainError("invalid edge-end grouping: need exactly three of six ends");
    const auto inc = g.incident(v);
    if (degree_of(inc) != 6)
        throw DomainError("split_degree6 needs a degree-6 vertex; '" + v + "' has degree " +
                          std::to_string(degree_of(inc)));

    struct Pending {
        EdgeId id;
        VertexId other;  // empty for self-loops
        int end_a;
        int end_b;
    };
    std::vector<Pending> pending;
    int pos = 0;
    for (const auto& i : inc) {
        if (i.self_loop) {
            pending.push_back({i.edge, {}, pos, pos + 1});
            pos += 2;
        } else {
            pending.push_back({i.edge, i.other, pos, -1});
            pos += 1;
        }
    }
    for (const auto& p : pending) g.remove_edge(p.id);

    const VertexId a = g.fresh_vertex_id(v + "|a");
    g.add_vertex(a);
    const VertexId b = g.fresh_vertex_id(v + "|b");
    g.add_vertex(b);
    auto side = [&](int end) { return (grouping.first_half_mask >> end) & 1 ? a : b; };
    for (const auto& p : pending) {
        if (p.end_b < 0)
            g.add_edge(p.id, side(p.end_a), p.other);
        else
            g.add_edge(p.id, side(p.end_a), side(p.end_b));
    }
    g.add_edge(g.fresh_edge_id("x"), a, b);

    const bool was_root = g.root() == v;
    g.remove_vertex(v);
    if (was_root) g.set_root(a);
    return {a, b};
}

}  // namespace surgery

FiniteMultigraph subdivide_edge(const FiniteMultigraph& g, const EdgeId& e) {
    auto out = g;
    surgery::subdivide(out, e);
    return out;
}

FiniteMultigraph attach_lollipop(const FiniteMultigraph& g, const VertexId& v) {
    auto out = g;
    surgery::lollipop(out, v);
    return out;
}

FiniteMultigraph double_edges(const FiniteMultigraph& g) {
    auto out = g;
    for (const auto& e : g.edge_ids()) {
        const auto& ends = g.endpoints(e);
        out.add_edge(out.fresh_edge_id(e + "#"), ends.u, ends.v);
    }
    return out;
}

FiniteMultigraph add_self_loops(const FiniteMultigraph& g, const VertexId& v, std::size_t m) {
    auto out = g;
    surgery::self_loops(out, v, m);
    return out;
}

FiniteMultigraph split_degree6(const FiniteMultigraph& g, const VertexId& v, EdgeEndGrouping grouping) {
    auto out = g;
    surgery::split6(out, v, grouping);
    return out;
}

bool is_k_regular_within(const GraphOracle& g, std::size_t k, std::size_t r) {
    std::unordered_map<VertexId, std::size_t> depth{{g.root(), 0}};
    std::deque<VertexId> queue{g.root()};
    while (!queue.empty()) {
        const VertexId v = std::move(queue.front());
        queue.pop_front();
        const auto inc = g.incident(v);
        if (degree_of(inc) != k) return false;
        const std::size_t d = depth.at(v);
        if (d == r) continue;
        for (const auto& i : inc) {
            if (depth.emplace(i.other, d + 1).second) queue.push_back(i.other);
        }
    }
    return true;
}

}  // namespace endgraph
