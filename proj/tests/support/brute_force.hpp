#pragma once

// Slow reference implementations used as independent oracles by the tests.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "endgraph/ball.hpp"
#include "endgraph/graph.hpp"

namespace endgraph::testing {

// Rooted isomorphism of two balls by trying every bijection that fixes the
// root and respects stub counts.
inline bool brute_isomorphic(const Ball& a, const Ball& b) {
    const std::size_t n = a.ids.size();
    if (n != b.ids.size() || a.edges.size() != b.edges.size() || a.radius != b.radius) return false;
    auto normalized = [](std::vector<std::pair<std::uint32_t, std::uint32_t>> edges) {
        for (auto& [u, v] : edges)
            if (u > v) std::swap(u, v);
        std::sort(edges.begin(), edges.end());
        return edges;
    };
    const auto target = normalized(b.edges);
    std::vector<std::uint32_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    do {
        if (perm[0] != 0) continue;
        bool ok = true;
        for (std::size_t v = 0; v < n && ok; ++v) ok = a.stubs[v] == b.stubs[perm[v]];
        if (!ok) continue;
        auto mapped = a.edges;
        for (auto& [u, v] : mapped) {
            u = perm[u];
            v = perm[v];
        }
        if (normalized(mapped) == target) return true;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return false;
}

// Connected multigraph on `vertices` vertices: a random spanning tree plus
// `extra` random edges, self-loops and parallel edges included. Root "v0".
inline FiniteMultigraph random_multigraph(std::mt19937_64& rng, std::size_t vertices, std::size_t extra) {
    FiniteMultigraph g("random");
    for (std::size_t v = 0; v < vertices; ++v) g.add_vertex("v" + std::to_string(v));
    std::size_t e = 0;
    for (std::size_t v = 1; v < vertices; ++v)
        g.add_edge("e" + std::to_string(e++), "v" + std::to_string(rng() % v), "v" + std::to_string(v));
    for (std::size_t i = 0; i < extra; ++i)
        g.add_edge("e" + std::to_string(e++), "v" + std::to_string(rng() % vertices), "v" + std::to_string(rng() % vertices));
    g.set_root("v0");
    return g;
}

// Same graph with shuffled vertex names and insertion orders.
inline FiniteMultigraph relabel(const FiniteMultigraph& g, std::mt19937_64& rng) {
    const auto& vs = g.vertices();
    std::vector<std::size_t> names(vs.size());
    std::iota(names.begin(), names.end(), std::size_t{0});
    std::shuffle(names.begin(), names.end(), rng);
    auto rename = [&](const VertexId& v) {
        const auto i = static_cast<std::size_t>(std::find(vs.begin(), vs.end(), v) - vs.begin());
        return "w" + std::to_string(names[i]);
    };
    std::vector<VertexId> order;
    for (const auto& v : vs) order.push_back(rename(v));
    std::shuffle(order.begin(), order.end(), rng);
    auto edges = g.edge_ids();
    std::shuffle(edges.begin(), edges.end(), rng);
    FiniteMultigraph h("relabeled");
    for (const auto& v : order) h.add_vertex(v);
    std::size_t e = 0;
    for (const auto& id : edges) {
        const auto& ends = g.endpoints(id);
        if (rng() % 2)
            h.add_edge("f" + std::to_string(e++), rename(ends.u), rename(ends.v));
        else
            h.add_edge("f" + std::to_string(e++), rename(ends.v), rename(ends.u));
    }
    h.set_root(rename(*g.root()));
    return h;
}

// Moves one endpoint of a random edge to a random vertex; the result may or
// may not be isomorphic to g. Edgeless graphs come back unchanged.
inline FiniteMultigraph rewire(const FiniteMultigraph& g, std::mt19937_64& rng) {
    FiniteMultigraph h = g;
    const auto edges = h.edge_ids();
    if (edges.empty()) return h;
    const auto e = edges[rng() % edges.size()];
    const auto ends = h.endpoints(e);
    h.remove_edge(e);
    h.add_edge(e, ends.u, h.vertices()[rng() % h.vertex_count()]);
    return h;
}

// Betti number of a finite multigraph counted from scratch.
inline std::int64_t brute_rank(const FiniteMultigraph& g) {
    const auto& vs = g.vertices();
    std::vector<std::size_t> parent(vs.size());
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto index = [&](const VertexId& v) { return static_cast<std::size_t>(std::find(vs.begin(), vs.end(), v) - vs.begin()); };
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x];
        return x;
    };
    std::int64_t cycles = 0;
    for (const auto& e : g.edge_ids()) {
        const auto& ends = g.endpoints(e);
        const auto a = find(index(ends.u));
        const auto b = find(index(ends.v));
        if (a == b)
            ++cycles;
        else
            parent[a] = b;
    }
    return cycles;
}

}  // namespace endgraph::testing
