// Canonical labeling of rooted balls.
//
// Two stages. Pendant structure (everything that hangs off the rest of the
// ball through a single neighbor) is peeled leaf-first and encoded as nested
// labels, which handles trees, lollipops and cacti in near-linear time. The
// remaining core, including the root, is canonized by individualization and
// refinement: equitable colour refinement, search over the first non-singleton
// cell, pruning by refinement traces and by automorphisms found at equal
// leaves. No hashing is involved, so equal codes mean isomorphic balls.

#include <algorithm>
#include <numeric>
#include <optional>

#include "endgraph/ball.hpp"
#include "endgraph/errors.hpp"

namespace endgraph {

namespace {

using Adjacency = std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>>;  // (neighbor, multiplicity)

struct Multigraph {
    std::vector<std::uint32_t> loops;
    Adjacency adj;
};

Multigraph build(const Ball& b) {
    const std::size_t n = b.ids.size();
    Multigraph g;
    g.loops.assign(n, 0);
    std::vector<std::vector<std::uint32_t>> raw(n);
    for (auto [u, v] : b.edges) {
        if (u == v) {
            ++g.loops[u];
        } else {
            raw[u].push_back(v);
            raw[v].push_back(u);
        }
    }
    g.adj.resize(n);
    for (std::size_t v = 0; v < n; ++v) {
        auto& r = raw[v];
        std::sort(r.begin(), r.end());
        for (std::size_t i = 0; i < r.size();) {
            std::size_t j = i;
            while (j < r.size() && r[j] == r[i]) ++j;
            g.adj[v].emplace_back(r[i], static_cast<std::uint32_t>(j - i));
            i = j;
        }
    }
    return g;
}

// Union-find over vertex indices for orbit bookkeeping.
struct Orbits {
    std::vector<std::uint32_t> parent;
    explicit Orbits(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0u); }
    std::uint32_t find(std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::uint32_t a, std::uint32_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

using Trace = std::vector<std::int64_t>;

class CoreCanonizer {
public:
    CoreCanonizer(std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj,
                  std::vector<std::uint32_t> initial_colors)
        : adj_(std::move(adj)), initial_(std::move(initial_colors)) {}

    // Returns (edge code, canonical order of core indices).
    std::pair<std::string, std::vector<std::uint32_t>> run() {
        std::vector<std::uint32_t> colors = initial_;
        std::vector<Trace> path;
        search(colors, path);
        return {best_->code, best_->order};
    }

private:
    struct Leaf {
        std::vector<Trace> traces;
        std::string code;
        std::vector<std::uint32_t> order;
    };

    // Refines to the coarsest equitable partition below `colors`. Colours
    // are ranks of signatures, so they depend only on the isomorphism type.
    Trace refine(std::vector<std::uint32_t>& colors) const {
        const std::size_t n = colors.size();
        std::size_t cells = count_cells(colors);
        std::vector<std::vector<std::int64_t>> sig(n);
        while (true) {
            for (std::size_t v = 0; v < n; ++v) {
                std::vector<std::pair<std::uint32_t, std::uint32_t>> nb;
                nb.reserve(adj_[v].size());
                for (auto [u, m] : adj_[v]) nb.emplace_back(colors[u], m);
                std::sort(nb.begin(), nb.end());
                auto& s = sig[v];
                s.clear();
                s.push_back(colors[v]);
                for (std::size_t i = 0; i < nb.size();) {
                    std::size_t j = i;
                    std::int64_t total = 0;
                    while (j < nb.size() && nb[j].first == nb[i].first) total += nb[j++].second;
                    s.push_back(nb[i].first);
                    s.push_back(total);
                    i = j;
                }
            }
            std::vector<std::uint32_t> idx(n);
            std::iota(idx.begin(), idx.end(), 0u);
            std::sort(idx.begin(), idx.end(), [&](auto a, auto b) { return sig[a] < sig[b]; });
            std::vector<std::uint32_t> next(n);
            std::uint32_t rank = 0;
            Trace trace;
            for (std::size_t i = 0; i < n; ++i) {
                if (i > 0 && sig[idx[i]] != sig[idx[i - 1]]) ++rank;
                next[idx[i]] = rank;
                if (i == 0 || sig[idx[i]] != sig[idx[i - 1]]) {
                    trace.push_back(-1);
                    trace.insert(trace.end(), sig[idx[i]].begin(), sig[idx[i]].end());
                }
            }
            const std::size_t new_cells = rank + 1;
            colors = std::move(next);
            if (new_cells == cells) return trace;
            cells = new_cells;
        }
    }

    static std::size_t count_cells(const std::vector<std::uint32_t>& colors) {
        std::uint32_t top = 0;
        for (auto c : colors) top = std::max(top, c);
        return colors.empty() ? 0 : top + 1;
    }

    std::string leaf_code(const std::vector<std::uint32_t>& order, const std::vector<std::uint32_t>& position) const {
        std::string code;
        for (std::size_t i = 0; i < order.size(); ++i) {
            std::vector<std::pair<std::uint32_t, std::uint32_t>> row;
            for (auto [u, m] : adj_[order[i]])
                if (position[u] > i) row.emplace_back(position[u], m);
            std::sort(row.begin(), row.end());
            code += '[';
            for (auto [j, m] : row) {
                code += std::to_string(j);
                code += 'x';
                code += std::to_string(m);
                code += ',';
            }
            code += ']';
        }
        return code;
    }

    // Three-way comparison of the current path against the best leaf's
    // traces over the shared prefix.
    int compare_path(const std::vector<Trace>& path) const {
        const auto& best = best_->traces;
        for (std::size_t i = 0; i < path.size(); ++i) {
            if (i >= best.size()) return 1;
            if (path[i] < best[i]) return -1;
            if (best[i] < path[i]) return 1;
        }
        return 0;
    }

    void search(std::vector<std::uint32_t> colors, std::vector<Trace>& path) {
        path.push_back(refine(colors));
        const int cmp = best_ ? compare_path(path) : -1;
        if (cmp > 0) {
            path.pop_back();
            return;
        }

        const std::size_t n = colors.size();
        if (count_cells(colors) == n) {
            std::vector<std::uint32_t> order(n);
            for (std::uint32_t v = 0; v < n; ++v) order[colors[v]] = v;
            std::string code = leaf_code(order, colors);
            if (!best_ || cmp < 0 || code < best_->code) {
                best_ = Leaf{path, std::move(code), std::move(order)};
            } else if (code == best_->code) {
                std::vector<std::uint32_t> automorphism(n);
                for (std::size_t i = 0; i < n; ++i) automorphism[order[i]] = best_->order[i];
                automorphisms_.push_back(std::move(automorphism));
            }
            path.pop_back();
            return;
        }

        std::vector<std::uint32_t> size(n, 0);
        for (auto c : colors) ++size[c];
        std::uint32_t target = 0;
        while (size[target] < 2) ++target;
        std::vector<std::uint32_t> cell;
        for (std::uint32_t v = 0; v < n; ++v)
            if (colors[v] == target) cell.push_back(v);

        std::vector<std::uint32_t> explored;
        std::size_t known = static_cast<std::size_t>(-1);
        Orbits orbits(n);
        for (auto v : cell) {
            if (automorphisms_.size() != known) {
                known = automorphisms_.size();
                orbits = Orbits(n);
                for (const auto& a : automorphisms_) {
                    const bool fixes = std::all_of(prefix_.begin(), prefix_.end(), [&](auto p) { return a[p] == p; });
                    if (!fixes) continue;
                    for (std::uint32_t x = 0; x < n; ++x) orbits.unite(x, a[x]);
                }
            }
            const bool redundant =
                std::any_of(explored.begin(), explored.end(), [&](auto w) { return orbits.find(w) == orbits.find(v); });
            if (redundant) continue;

            std::vector<std::uint32_t> child(n);
            for (std::uint32_t u = 0; u < n; ++u) child[u] = 2 * colors[u] + (colors[u] == target && u != v ? 1 : 0);
            prefix_.push_back(v);
            search(std::move(child), path);
            prefix_.pop_back();
            explored.push_back(v);
        }
        path.pop_back();
    }

    std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> adj_;
    std::vector<std::uint32_t> initial_;
    std::optional<Leaf> best_;
    std::vector<std::vector<std::uint32_t>> automorphisms_;
    std::vector<std::uint32_t> prefix_;
};

}  // namespace

CanonicalForm canonical_form(const Ball& b) {
    const std::size_t n = b.ids.size();
    if (n == 0) throw DomainError("empty ball");
    const Multigraph g = build(b);

    // Stage 1: peel pendant pieces.
    std::vector<std::uint32_t> active(n);
    for (std::size_t v = 0; v < n; ++v) active[v] = static_cast<std::uint32_t>(g.adj[v].size());
    std::vector<bool> peeled(n, false);
    std::vector<std::vector<std::uint32_t>> children(n);
    std::vector<std::string> label(n);
    std::vector<std::uint32_t> queue;
    for (std::uint32_t v = 1; v < n; ++v)
        if (active[v] == 1) queue.push_back(v);

    auto sort_children = [&](std::uint32_t v) {
        auto& ch = children[v];
        std::sort(ch.begin(), ch.end(), [&](auto a, auto c) { return label[a] < label[c]; });
    };
    auto children_text = [&](std::uint32_t v) {
        std::string s;
        for (auto c : children[v]) {
            s += label[c];
            std::string().swap(label[c]);
        }
        return s;
    };

    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
        const auto v = queue[qi];
        if (peeled[v] || active[v] != 1) continue;
        std::uint32_t parent = 0;
        std::uint32_t mult = 0;
        for (auto [u, m] : g.adj[v])
            if (!peeled[u]) {
                parent = u;
                mult = m;
            }
        sort_children(v);
        label[v] = "(" + std::to_string(b.stubs[v]) + "," + std::to_string(g.loops[v]) + "," + std::to_string(mult) +
                   ":" + children_text(v) + ")";
        peeled[v] = true;
        children[parent].push_back(v);
        if (--active[parent] == 1 && parent != 0) queue.push_back(parent);
    }

    // Stage 2: canonize the core.
    std::vector<std::uint32_t> core;
    std::vector<std::int64_t> core_index(n, -1);
    for (std::uint32_t v = 0; v < n; ++v)
        if (!peeled[v]) {
            core_index[v] = static_cast<std::int64_t>(core.size());
            core.push_back(v);
        }
    std::vector<std::string> key(core.size());
    for (std::size_t i = 0; i < core.size(); ++i) {
        const auto v = core[i];
        sort_children(v);
        key[i] = "(" + std::to_string(b.depth[v]) + "," + std::to_string(b.stubs[v]) + "," +
                 std::to_string(g.loops[v]) + ":" + children_text(v) + ")";
    }

    std::vector<std::uint32_t> core_order;
    std::string edge_code;
    if (core.size() == 1) {
        core_order = {0};
    } else {
        std::vector<std::uint32_t> idx(core.size());
        std::iota(idx.begin(), idx.end(), 0u);
        // The root (core index 0) gets a colour of its own.
        std::sort(idx.begin(), idx.end(), [&](auto a, auto c) {
            return std::make_pair(a != 0, std::cref(key[a])) < std::make_pair(c != 0, std::cref(key[c]));
        });
        std::vector<std::uint32_t> colors(core.size());
        std::uint32_t rank = 0;
        for (std::size_t i = 0; i < idx.size(); ++i) {
            if (i > 0 && (idx[i - 1] == 0 || key[idx[i]] != key[idx[i - 1]])) ++rank;
            colors[idx[i]] = rank;
        }
        std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> core_adj(core.size());
        for (std::size_t i = 0; i < core.size(); ++i)
            for (auto [u, m] : g.adj[core[i]])
                if (core_index[u] >= 0) core_adj[i].emplace_back(static_cast<std::uint32_t>(core_index[u]), m);
        CoreCanonizer canon(std::move(core_adj), std::move(colors));
        std::tie(edge_code, core_order) = canon.run();
    }

    CanonicalForm form;
    form.code = "R" + std::to_string(b.radius.half_steps) + "|" + std::to_string(core.size()) + "|";
    for (auto i : core_order) {
        form.code += key[i];
        form.code += ';';
    }
    form.code += '|';
    form.code += edge_code;

    form.order.reserve(n);
    std::vector<std::uint32_t> stack;
    for (auto i : core_order) {
        stack.push_back(core[i]);
        while (!stack.empty()) {
            const auto v = stack.back();
            stack.pop_back();
            form.order.push_back(v);
            for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) stack.push_back(*it);
        }
    }
    return form;
}

std::string canonical_code(const Ball& b) { return canonical_form(b).code; }

std::optional<std::vector<std::pair<VertexId, VertexId>>> rooted_isomorphic(const Ball& b1, const Ball& b2) {
    if (b1.radius != b2.radius)
        throw DomainError("rooted_isomorphic needs equal radii (" + to_string(b1.radius) + " vs " +
                          to_string(b2.radius) + ")");
    if (b1.ids.size() != b2.ids.size() || b1.edges.size() != b2.edges.size()) return std::nullopt;
    const auto f1 = canonical_form(b1);
    const auto f2 = canonical_form(b2);
    if (f1.code != f2.code) return std::nullopt;
    std::vector<std::pair<VertexId, VertexId>> map;
    map.reserve(f1.order.size());
    for (std::size_t i = 0; i < f1.order.size(); ++i) map.emplace_back(b1.ids[f1.order[i]], b2.ids[f2.order[i]]);
    return map;
}

}  // namespace endgraph
