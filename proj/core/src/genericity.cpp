#include "endgraph/genericity.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <mutex>
#include <numeric>
#include <random>
#include <sstream>
#include <thread>
#include <unordered_map>
#include <unordered_set>

#include "endgraph/ball.hpp"
#include "endgraph/ends.hpp"
#include "endgraph/errors.hpp"

namespace endgraph {

void ExperimentConfig::validate() const {
    if (N == 0) throw DomainError("experiment needs N >= 1");
    if (k == 0) throw DomainError("experiment needs k >= 1");
    if ((k * N) % 2 != 0) throw DomainError("k * N must be even for a configuration model");
    if (n < 0 || n > R) throw DomainError("experiment needs 0 <= n <= R");
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial) {
    return splitmix64(seed + 0x9e3779b97f4a7c15ULL * (static_cast<std::uint64_t>(trial) + 1));
}

namespace {

// Uniform in [0, bound) by rejection; std::uniform_int_distribution is not
// portable across standard libraries.
std::uint64_t below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = rng();
    while (x >= limit) x = rng();
    return x % bound;
}

}  // namespace

FiniteMultigraph sample_configuration(std::size_t k, std::size_t N, std::uint64_t seed) {
    if (N == 0) throw DomainError("configuration model needs N >= 1");
    if ((k * N) % 2 != 0) throw DomainError("k * N must be even for a configuration model");
    std::vector<std::size_t> stubs(k * N);
    std::iota(stubs.begin(), stubs.end(), std::size_t{0});
    std::mt19937_64 rng(seed);
    for (std::size_t i = stubs.size(); i > 1; --i) std::swap(stubs[i - 1], stubs[below(rng, i)]);
    FiniteMultigraph g("config");
    for (std::size_t v = 0; v < N; ++v) g.add_vertex("v" + std::to_string(v));
    for (std::size_t j = 0; j + 1 < stubs.size(); j += 2)
        g.add_edge("e" + std::to_string(j / 2), "v" + std::to_string(stubs[j] / k), "v" + std::to_string(stubs[j + 1] / k));
    g.set_root("v0");
    return g;
}

double ExperimentResult::fraction_in_Un() const {
    if (records.empty()) return 0.0;
    std::size_t hits = 0;
    for (const auto& r : records) hits += r.in_Un ? 1 : 0;
    return static_cast<double>(hits) / static_cast<double>(records.size());
}

double ExperimentResult::fraction_in_Vn() const {
    if (records.empty()) return 0.0;
    std::size_t hits = 0;
    for (const auto& r : records) hits += r.vn_witness_radius ? 1 : 0;
    return static_cast<double>(hits) / static_cast<double>(records.size());
}

std::string ExperimentResult::to_csv() const {
    std::ostringstream out;
    out << "trial,seed,rank_ball_R,in_Un,in_Vn_witness_radius\n";
    for (const auto& r : records)
        out << r.trial << ',' << r.seed << ',' << r.rank_ball_R << ',' << (r.in_Un ? 1 : 0) << ','
            << r.vn_witness_radius.value_or(-1) << '\n';
    return out.str();
}

ExperimentResult run_experiment(const ExperimentConfig& cfg, std::size_t threads) {
    cfg.validate();
    ExperimentResult result{cfg, std::vector<TrialRecord>(cfg.trials)};
    auto run_trial = [&](std::size_t i) {
        TrialRecord& rec = result.records[i];
        rec.trial = i;
        rec.seed = trial_seed(cfg.seed, i);
        const auto g = make_oracle(root_component(sample_configuration(cfg.k, cfg.N, rec.seed)));
        const Ball w = window(*g, cfg.R);
        rec.rank_ball_R = ball(*g, HalfRadius::whole(cfg.R)).rank();
        rec.in_Un = rec.rank_ball_R >= cfg.n;
        rec.vn_witness_radius = v_n_witness_radius(w, cfg.n, cfg.R);
    };
    threads = std::max<std::size_t>(1, std::min(threads, cfg.trials));
    if (threads == 1) {
        for (std::size_t i = 0; i < cfg.trials; ++i) run_trial(i);
        return result;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (std::size_t t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < cfg.trials; i = next++) {
                try {
                    run_trial(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure) failure = std::current_exception();
                }
            }
        });
    for (auto& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return result;
}

namespace {

struct Chosen {
    VertexId at;
    EdgeId edge;
    VertexId other;
};

std::unordered_map<VertexId, std::uint32_t> index_map(const Ball& w) {
    std::unordered_map<VertexId, std::uint32_t> index;
    for (std::uint32_t v = 0; v < w.ids.size(); ++v) index.emplace(w.ids[v], v);
    return index;
}

// True when the neighbor lies at depth >= min_depth; vertices missing from
// the window are deeper than its horizon.
bool deep_enough(const std::unordered_map<VertexId, std::uint32_t>& index, const Ball& w, const VertexId& v,
                 std::int64_t min_depth) {
    const auto it = index.find(v);
    return it == index.end() || w.depth[it->second] >= min_depth;
}

void decorate(OraclePatch& patch, int depth, const std::string& tag, const VertexId& s, std::size_t k) {
    if (k % 2 == 0) {
        for (std::size_t i = 0; i < (k - 2) / 2; ++i) patch.added_edges.push_back({patch_id(depth, tag + "o" + std::to_string(i)), s, s});
        return;
    }
    const VertexId p = patch_id(depth, tag + "p");
    patch.added_vertices.push_back(p);
    for (std::size_t i = 0; i < k - 2; ++i) patch.added_edges.push_back({patch_id(depth, tag + "c" + std::to_string(i)), s, p});
    patch.added_edges.push_back({patch_id(depth, tag + "o"), p, p});
}

}  // namespace

OraclePtr delta_u(const OraclePtr& g, std::int64_t r, std::size_t n, std::size_t k) {
    if (k < 3) throw DomainError("delta_u needs k >= 3");
    if (r < 0) throw DomainError("delta_u needs r >= 0");
    if (n == 0) return g;
    std::vector<Chosen> chosen;
    for (std::int64_t R = r + 1; chosen.size() < n; ++R) {
        if (R > r + 64) throw DomainError("delta_u: fewer than " + std::to_string(n) + " edges outside the ball");
        const Ball w = window(*g, R);
        const auto index = index_map(w);
        chosen.clear();
        std::unordered_set<EdgeId> seen;
        for (std::uint32_t v = 0; v < w.ids.size() && chosen.size() < n; ++v) {
            if (w.depth[v] < r) continue;
            for (const auto& inc : g->incident(w.ids[v])) {
                if (inc.self_loop || !deep_enough(index, w, inc.other, r) || !seen.insert(inc.edge).second) continue;
                chosen.push_back({w.ids[v], inc.edge, inc.other});
                if (chosen.size() == n) break;
            }
        }
        if (chosen.size() < n && w.stub_count() == 0)
            throw DomainError("delta_u: fewer than " + std::to_string(n) + " edges outside the ball");
    }
    const int depth = g->patch_depth() + 1;
    OraclePatch patch;
    for (std::size_t i = 0; i < n; ++i) {
        const std::string tag = "u" + std::to_string(i);
        const VertexId s = patch_id(depth, tag + "s");
        patch.removed_edges.push_back(chosen[i].edge);
        patch.added_vertices.push_back(s);
        patch.added_edges.push_back({patch_id(depth, tag + "a"), chosen[i].at, s});
        patch.added_edges.push_back({patch_id(depth, tag + "b"), s, chosen[i].other});
        decorate(patch, depth, tag, s, k);
    }
    return apply_patch(g, std::move(patch), std::nullopt,
                       g->provenance() + "+delta_u(" + std::to_string(r) + "," + std::to_string(n) + "," +
                           std::to_string(k) + ")");
}

OraclePtr delta_v(const OraclePtr& g, std::int64_t n, std::size_t k, std::int64_t R) {
    if (k < 3) throw DomainError("delta_v needs k >= 3");
    if (n < 0 || n > R) throw DomainError("delta_v needs 0 <= n <= horizon");
    const Ball w = window(*g, R);
    const auto index = index_map(w);

    std::vector<std::uint32_t> parent(w.ids.size());
    std::iota(parent.begin(), parent.end(), 0u);
    auto find = [&](std::uint32_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [u, v] : w.edges)
        if (w.depth[u] >= n && w.depth[v] >= n) parent[find(u)] = find(v);

    // Components in order of their first vertex, each with its chosen edge.
    std::vector<std::uint32_t> leaders;
    std::unordered_map<std::uint32_t, std::size_t> slot;
    // An edge inside the component is preferred; otherwise an edge up to
    // depth n - 1, which is only a stub of B_n and may be subdivided too.
    std::vector<std::optional<Chosen>> chosen;
    std::vector<std::optional<Chosen>> fallback;
    for (std::uint32_t v = 0; v < w.ids.size(); ++v) {
        if (w.depth[v] < n) continue;
        const auto leader = find(v);
        auto [it, fresh] = slot.emplace(leader, leaders.size());
        if (fresh) {
            leaders.push_back(leader);
            chosen.emplace_back();
            fallback.emplace_back();
        }
        auto& pick = chosen[it->second];
        if (pick) continue;
        for (const auto& inc : g->incident(w.ids[v])) {
            if (inc.self_loop) continue;
            if (deep_enough(index, w, inc.other, n)) {
                pick = Chosen{w.ids[v], inc.edge, inc.other};
                break;
            }
            if (!fallback[it->second]) fallback[it->second] = Chosen{w.ids[v], inc.edge, inc.other};
        }
    }
    const std::size_t c = leaders.size();
    if (c <= 1) return g;
    for (std::size_t i = 0; i < c; ++i) {
        if (!chosen[i]) chosen[i] = fallback[i];
        if (!chosen[i]) throw DomainError("delta_v: component of " + w.ids[leaders[i]] + " has no edge to subdivide");
    }

    const int depth = g->patch_depth() + 1;
    OraclePatch patch;
    auto vertex = [&](std::size_t comp, std::size_t partner) {
        const std::size_t position = partner < comp ? partner : partner - 1;
        return patch_id(depth, "v" + std::to_string(comp) + "_" + std::to_string(position));
    };
    for (std::size_t i = 0; i < c; ++i) {
        const auto& pick = *chosen[i];
        patch.removed_edges.push_back(pick.edge);
        VertexId previous = pick.at;
        for (std::size_t j = 0; j + 1 < c; ++j) {
            const VertexId s = patch_id(depth, "v" + std::to_string(i) + "_" + std::to_string(j));
            patch.added_vertices.push_back(s);
            patch.added_edges.push_back({patch_id(depth, "w" + std::to_string(i) + "_" + std::to_string(j)), previous, s});
            previous = s;
        }
        patch.added_edges.push_back({patch_id(depth, "w" + std::to_string(i) + "_" + std::to_string(c - 1)), previous, pick.other});
    }
    for (std::size_t i = 0; i < c; ++i)
        for (std::size_t j = i + 1; j < c; ++j)
            for (std::size_t t = 0; t < k - 2; ++t)
                patch.added_edges.push_back({patch_id(depth, "x" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(t)),
                                             vertex(i, j), vertex(j, i)});
    return apply_patch(g, std::move(patch), std::nullopt,
                       g->provenance() + "+delta_v(" + std::to_string(n) + "," + std::to_string(k) + ")");
}

}  // namespace endgraph
