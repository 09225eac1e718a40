#include <algorithm>
#include <cmath>
#include <deque>
#include <sstream>

#include "endgraph/ball.hpp"
#include "endgraph/errors.hpp"

namespace endgraph {

HalfRadius parse_half_radius(const std::string& text) {
    auto fail = [&]() -> HalfRadius { throw DomainError("invalid radius '" + text + "': expected a half-integer >= 0"); };
    auto digits = [](const std::string& s) {
        return !s.empty() && s.size() < 16 && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
    };
    if (auto slash = text.find('/'); slash != std::string::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!digits(num) || den != "2") return fail();
        return {std::stoll(num)};
    }
    if (auto dot = text.find('.'); dot != std::string::npos) {
        const auto whole = text.substr(0, dot);
        const auto frac = text.substr(dot + 1);
        if (!digits(whole)) return fail();
        if (frac == "0" || frac.empty()) return HalfRadius::whole(std::stoll(whole));
        if (frac == "5") return {2 * std::stoll(whole) + 1};
        return fail();
    }
    if (!digits(text)) return fail();
    return HalfRadius::whole(std::stoll(text));
}

std::string to_string(HalfRadius r) {
    if (r.half_steps % 2 == 0) return std::to_string(r.half_steps / 2);
    return std::to_string(r.half_steps / 2) + ".5";
}

std::size_t Ball::stub_count() const {
    std::size_t n = 0;
    for (auto s : stubs) n += s;
    return n;
}

std::vector<std::size_t> Ball::degrees() const {
    std::vector<std::size_t> deg(stubs.begin(), stubs.end());
    for (auto [u, v] : edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

std::int64_t Ball::rank() const {
    return static_cast<std::int64_t>(edges.size()) - static_cast<std::int64_t>(ids.size()) + 1;
}

std::optional<std::uint32_t> Ball::index_of(const VertexId& v) const {
    auto it = std::find(ids.begin(), ids.end(), v);
    if (it == ids.end()) return std::nullopt;
    return static_cast<std::uint32_t>(it - ids.begin());
}

namespace {

class FiniteView final : public GraphOracle {
public:
    explicit FiniteView(const FiniteMultigraph& g) : g_(g) {
        if (!g.root()) throw DomainError("graph '" + g.name() + "' has no root");
    }
    VertexId root() const override { return *g_.root(); }
    std::vector<Incidence> incident(const VertexId& v) const override { return g_.incident(v); }
    std::string provenance() const override { return "finite:" + g_.name(); }

private:
    const FiniteMultigraph& g_;
};

}  // namespace

Ball ball(const GraphOracle& g, HalfRadius radius) {
    if (radius.half_steps < 0) throw DomainError("ball radius must be non-negative");
    const std::int64_t h = radius.half_steps;

    Ball b;
    b.radius = radius;
    std::unordered_map<VertexId, std::uint32_t> index;
    std::vector<std::vector<Incidence>> incident;

    b.ids.push_back(g.root());
    b.depth.push_back(0);
    index.emplace(b.ids[0], 0);
    for (std::size_t i = 0; i < b.ids.size(); ++i) {
        incident.push_back(g.incident(b.ids[i]));
        if (2 * (b.depth[i] + 1) >= h) continue;
        for (const auto& inc : incident.back()) {
            if (inc.self_loop) continue;
            if (index.emplace(inc.other, static_cast<std::uint32_t>(b.ids.size())).second) {
                b.ids.push_back(inc.other);
                b.depth.push_back(b.depth[i] + 1);
            }
        }
    }

    b.stubs.assign(b.ids.size(), 0);
    for (std::uint32_t i = 0; i < b.ids.size(); ++i) {
        const std::int64_t di = b.depth[i];
        if (2 * di >= h) continue;
        for (const auto& inc : incident[i]) {
            if (inc.self_loop) {
                if (2 * di + 1 < h)
                    b.edges.emplace_back(i, i);
                else
                    b.stubs[i] += 2;
                continue;
            }
            auto it = index.find(inc.other);
            if (it != index.end() && di + b.depth[it->second] + 1 < h) {
                if (i < it->second) b.edges.emplace_back(i, it->second);
            } else {
                ++b.stubs[i];
            }
        }
    }
    return b;
}

Ball ball(const FiniteMultigraph& g, HalfRadius radius) { return ball(FiniteView(g), radius); }

Ball truncate(const Ball& b, HalfRadius radius) {
    if (radius > b.radius) throw DomainError("cannot truncate a ball to a larger radius");
    const std::int64_t h = radius.half_steps;
    Ball out;
    out.radius = radius;
    std::vector<std::int64_t> remap(b.ids.size(), -1);
    for (std::size_t i = 0; i < b.ids.size(); ++i) {
        if (i != 0 && 2 * b.depth[i] >= h) continue;
        remap[i] = static_cast<std::int64_t>(out.ids.size());
        out.ids.push_back(b.ids[i]);
        out.depth.push_back(b.depth[i]);
        out.stubs.push_back(2 * b.depth[i] < h ? b.stubs[i] : 0);
    }
    for (auto [u, v] : b.edges) {
        if (b.depth[u] + b.depth[v] + 1 < h) {
            out.edges.emplace_back(static_cast<std::uint32_t>(remap[u]), static_cast<std::uint32_t>(remap[v]));
            continue;
        }
        if (2 * b.depth[u] < h) ++out.stubs[static_cast<std::size_t>(remap[u])];
        if (2 * b.depth[v] < h) ++out.stubs[static_cast<std::size_t>(remap[v])];
    }
    return out;
}

std::string check_invariants(const Ball& b) {
    const std::int64_t h = b.radius.half_steps;
    const std::size_t n = b.ids.size();
    if (n == 0 || b.depth.size() != n || b.stubs.size() != n) return "size mismatch";
    if (b.depth[0] != 0) return "root depth is not 0";
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && 2 * b.depth[i] >= h) return "vertex " + b.ids[i] + " lies outside the radius";
        if (b.stubs[i] > 0 && 2 * b.depth[i] >= h) return "stub at vertex " + b.ids[i] + " on the boundary";
    }
    std::vector<std::vector<std::uint32_t>> adj(n);
    for (auto [u, v] : b.edges) {
        if (u >= n || v >= n) return "edge endpoint out of range";
        if (b.depth[u] + b.depth[v] + 1 >= h) return "edge " + b.ids[u] + "-" + b.ids[v] + " exceeds the radius";
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<std::int64_t> dist(n, -1);
    dist[0] = 0;
    std::deque<std::uint32_t> queue{0};
    while (!queue.empty()) {
        auto u = queue.front();
        queue.pop_front();
        for (auto v : adj[u])
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (dist[i] < 0) return "vertex " + b.ids[i] + " is disconnected";
        if (dist[i] != b.depth[i]) return "depth label of " + b.ids[i] + " is not its distance";
    }
    return {};
}

FiniteMultigraph to_graph(const Ball& b, const std::string& name) {
    FiniteMultigraph g(name);
    for (const auto& id : b.ids) g.add_vertex(id);
    for (std::size_t k = 0; k < b.edges.size(); ++k)
        g.add_edge("b" + std::to_string(k), b.ids[b.edges[k].first], b.ids[b.edges[k].second]);
    g.set_root(b.ids[0]);
    return g;
}

std::string to_text(const Ball& b) {
    std::ostringstream out;
    out << "ball radius=" << to_string(b.radius) << " root=" << b.ids[0] << '\n';
    for (std::size_t i = 0; i < b.ids.size(); ++i)
        out << "v " << b.ids[i] << " depth=" << b.depth[i] << " stubs=" << b.stubs[i] << '\n';
    for (auto [u, v] : b.edges) out << "e " << b.ids[u] << ' ' << b.ids[v] << '\n';
    return out.str();
}

std::string to_dot(const Ball& b) {
    auto quote = [](const std::string& s) {
        std::string q = "\"";
        for (char c : s) {
            if (c == '"' || c == '\\') q += '\\';
            q += c;
        }
        return q + "\"";
    };
    std::ostringstream out;
    out << "graph ball {\n";
    out << "  label=" << quote("radius " + to_string(b.radius)) << ";\n";
    for (std::size_t i = 0; i < b.ids.size(); ++i) {
        out << "  " << quote(b.ids[i]) << " [label=" << quote(b.ids[i] + "\\nd=" + std::to_string(b.depth[i]));
        if (i == 0) out << ", shape=doublecircle";
        out << "];\n";
    }
    for (auto [u, v] : b.edges) {
        out << "  " << quote(b.ids[u]) << " -- " << quote(b.ids[v]);
        if (u == v) out << " [color=blue]";
        out << ";\n";
    }
    std::size_t stub_id = 0;
    for (std::size_t i = 0; i < b.ids.size(); ++i) {
        for (std::uint32_t s = 0; s < b.stubs[i]; ++s, ++stub_id) {
            const std::string point = "stub" + std::to_string(stub_id);
            out << "  " << quote(point) << " [shape=point, width=0.05];\n";
            out << "  " << quote(b.ids[i]) << " -- " << quote(point) << " [style=dashed];\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace endgraph
