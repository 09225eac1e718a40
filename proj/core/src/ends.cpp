#include "endgraph/ends.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "endgraph/errors.hpp"

namespace endgraph {

namespace {

struct UnionFind {
    std::vector<std::uint32_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); }
};

// Component label per vertex of the depth >= level subgraph, -1 for shallower
// vertices. Labels are dense and ordered by first vertex.
std::vector<std::int64_t> label_components(const Ball& w, std::int64_t level, std::size_t& count) {
    const std::size_t n = w.ids.size();
    UnionFind uf(n);
    for (auto [u, v] : w.edges)
        if (w.depth[u] >= level && w.depth[v] >= level) uf.unite(u, v);
    std::vector<std::int64_t> label(n, -1);
    std::vector<std::int64_t> root_label(n, -1);
    count = 0;
    for (std::uint32_t v = 0; v < n; ++v) {
        if (w.depth[v] < level) continue;
        auto& l = root_label[uf.find(v)];
        if (l < 0) l = static_cast<std::int64_t>(count++);
        label[v] = l;
    }
    return label;
}

void check_horizon(std::int64_t r_max, std::int64_t R) {
    if (r_max < 0 || r_max > R)
        throw DomainError("component tree needs 0 <= depth <= horizon (got depth " + std::to_string(r_max) +
                          ", horizon " + std::to_string(R) + ")");
}

}  // namespace

std::vector<std::size_t> ComponentTree::persistent_branches() const {
    std::vector<std::size_t> out;
    if (levels.empty()) return out;
    const auto& last = levels.back();
    for (std::size_t i = 0; i < last.size(); ++i)
        if (last[i].open()) out.push_back(i);
    return out;
}

Ball window(const GraphOracle& g, std::int64_t R) {
    if (R < 0) throw DomainError("horizon must be non-negative");
    return ball(g, HalfRadius::whole(R + 1));
}

ComponentTree component_tree(const GraphOracle& g, std::int64_t r_max, std::int64_t R) {
    check_horizon(r_max, R);
    return component_tree(window(g, R), R, r_max);
}

ComponentTree component_tree(const Ball& w, std::int64_t R, std::int64_t r_max) {
    check_horizon(r_max, R);
    ComponentTree t;
    t.horizon = R;
    t.r_max = r_max;

    // One extra level so the deepest reported nodes know their open children.
    std::vector<std::vector<ComponentNode>> levels;
    std::vector<std::int64_t> previous;
    for (std::int64_t i = 0; i <= r_max + 1; ++i) {
        std::size_t count = 0;
        auto label = label_components(w, i, count);
        std::vector<ComponentNode> nodes(count);
        for (std::uint32_t v = 0; v < w.ids.size(); ++v) {
            if (label[v] < 0) continue;
            auto& node = nodes[static_cast<std::size_t>(label[v])];
            if (node.vertex_count == 0 || w.depth[v] < node.min_depth) {
                node.min_depth = w.depth[v];
                node.representative = w.ids[v];
            }
            ++node.vertex_count;
            node.open_stubs += w.stubs[v];
            if (i > 0) node.parent = previous[v];
        }
        for (auto [u, v] : w.edges)
            if (label[u] >= 0 && label[v] >= 0) ++nodes[static_cast<std::size_t>(label[u])].edge_count;
        for (auto& node : nodes)
            node.betti = static_cast<std::int64_t>(node.edge_count) - static_cast<std::int64_t>(node.vertex_count) + 1;
        if (i > 0) {
            auto& above = levels.back();
            for (std::size_t c = 0; c < nodes.size(); ++c)
                above[static_cast<std::size_t>(nodes[c].parent)].children.push_back(c);
        }
        levels.push_back(std::move(nodes));
        previous = std::move(label);
    }

    for (std::size_t i = 0; i + 1 < levels.size(); ++i) {
        for (auto& node : levels[i]) {
            node.new_cycles = node.betti;
            for (auto c : node.children)
                if (levels[i + 1][c].open()) node.new_cycles -= levels[i + 1][c].betti;
        }
    }
    levels.pop_back();
    for (auto& node : levels.back()) node.children.clear();
    t.levels = std::move(levels);
    return t;
}

std::vector<BranchProfile> loop_accumulation_profile(const ComponentTree& t) {
    std::vector<BranchProfile> out;
    for (std::size_t level = 0; level < t.levels.size(); ++level) {
        for (std::size_t idx = 0; idx < t.levels[level].size(); ++idx) {
            const auto& leaf = t.levels[level][idx];
            if (!leaf.children.empty()) continue;
            BranchProfile p;
            p.leaf_level = level;
            p.leaf_index = idx;
            p.persistent = level + 1 == t.levels.size() && leaf.open();
            p.cumulative.resize(level + 1);
            std::size_t at = idx;
            for (std::size_t l = level + 1; l-- > 0;) {
                p.cumulative[l] = t.levels[l][at].new_cycles;
                if (l > 0) at = static_cast<std::size_t>(t.levels[l][at].parent);
            }
            std::partial_sum(p.cumulative.begin(), p.cumulative.end(), p.cumulative.begin());
            out.push_back(std::move(p));
        }
    }
    return out;
}

bool still_growing(const BranchProfile& p, std::size_t window) {
    if (p.cumulative.size() <= window) return false;
    return p.cumulative.back() > p.cumulative[p.cumulative.size() - 1 - window];
}

std::int64_t rank_lower_bound(const GraphOracle& g, std::int64_t r) {
    if (r < 0) throw DomainError("radius must be non-negative");
    return ball(g, HalfRadius::whole(r)).rank();
}

bool in_V_n(const GraphOracle& g, std::int64_t n, std::int64_t R) {
    if (n < 0 || n > R) throw DomainError("in_V_n needs 0 <= n <= horizon");
    return v_n_witness_radius(window(g, R), n, R).has_value();
}

std::optional<std::int64_t> v_n_witness_radius(const GraphOracle& g, std::int64_t n, std::int64_t R) {
    if (n < 0 || n > R) throw DomainError("V_n witness needs 0 <= n <= horizon");
    return v_n_witness_radius(window(g, R), n, R);
}

std::optional<std::int64_t> v_n_witness_radius(const Ball& w, std::int64_t n, std::int64_t R) {
    const std::size_t size = w.ids.size();
    std::vector<std::uint32_t> sphere;
    for (std::uint32_t v = 0; v < size; ++v)
        if (w.depth[v] == n) sphere.push_back(v);
    if (sphere.size() <= 1) return n;

    // Edges ordered by the radius at which they enter the window.
    std::vector<std::pair<std::int64_t, std::size_t>> order;
    for (std::size_t e = 0; e < w.edges.size(); ++e) {
        auto [u, v] = w.edges[e];
        if (w.depth[u] >= n && w.depth[v] >= n) order.emplace_back(std::max(w.depth[u], w.depth[v]), e);
    }
    std::sort(order.begin(), order.end());

    UnionFind uf(size);
    std::size_t next = 0;
    for (std::int64_t r = n; r <= R; ++r) {
        for (; next < order.size() && order[next].first <= r; ++next) {
            auto [u, v] = w.edges[order[next].second];
            uf.unite(u, v);
        }
        const auto target = uf.find(sphere[0]);
        if (std::all_of(sphere.begin(), sphere.end(), [&](auto v) { return uf.find(v) == target; })) return r;
    }
    return std::nullopt;
}

std::string to_dot(const ComponentTree& t) {
    std::ostringstream out;
    out << "digraph ends {\n  rankdir=TB;\n";
    out << "  label=\"horizon " << t.horizon << "\";\n";
    for (std::size_t i = 0; i < t.levels.size(); ++i) {
        for (std::size_t j = 0; j < t.levels[i].size(); ++j) {
            const auto& n = t.levels[i][j];
            out << "  \"L" << i << "_" << j << "\" [label=\"L" << i << " " << n.representative << "\\nV=" << n.vertex_count
                << " b=" << n.betti << " new=" << n.new_cycles << " stubs=" << n.open_stubs << "\"";
            if (!n.open()) out << ", style=dashed";
            out << "];\n";
            if (n.parent >= 0) out << "  \"L" << i - 1 << "_" << n.parent << "\" -> \"L" << i << "_" << j << "\";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace endgraph
