#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "endgraph/graph.hpp"

namespace endgraph {

// Parameters of a configuration-model experiment.
struct ExperimentConfig {
    std::size_t k = 3;
    std::size_t N = 1000;
    std::int64_t n = 3;
    std::int64_t R = 8;
    std::size_t trials = 200;
    std::uint64_t seed = 42;

    // Throws DomainError unless k * N is even, N >= 1 and 0 <= n <= R.
    void validate() const;
};

std::uint64_t splitmix64(std::uint64_t x);

// Seed of trial i: splitmix64(seed + 0x9e3779b97f4a7c15 * (i + 1)).
std::uint64_t trial_seed(std::uint64_t seed, std::size_t trial);

// Uniform perfect matching of the k * N stubs (stub s belongs to vertex s / k),
// drawn by a Fisher-Yates shuffle over mt19937_64 with rejection sampling so
// the result is identical on every platform. Vertices "v<i>", edges "e<j>",
// root "v0". Self-loops and parallel edges are kept.
FiniteMultigraph sample_configuration(std::size_t k, std::size_t N, std::uint64_t seed);

struct TrialRecord {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    std::int64_t rank_ball_R = 0;
    bool in_Un = false;
    std::optional<std::int64_t> vn_witness_radius;
};

struct ExperimentResult {
    ExperimentConfig config;
    std::vector<TrialRecord> records;  // by trial index

    // Fractions over all trials; 0 when there are none.
    double fraction_in_Un() const;
    double fraction_in_Vn() const;
    // Header trial,seed,rank_ball_R,in_Un,in_Vn_witness_radius; -1 for no witness.
    std::string to_csv() const;
};

// Runs the trials on the root component of each sample, spread over
// `threads` workers. The result does not depend on `threads`.
ExperimentResult run_experiment(const ExperimentConfig& cfg, std::size_t threads = 1);

// Subdivides the first n edges (in breadth-first order) with both endpoints
// at depth >= r and decorates each new vertex: a lollipop for k = 3, a barrel
// cactus (k-2 parallel edges to a pendant with a self-loop) for odd k, and
// (k-2)/2 self-loops for even k. Searches up to depth r + 64. Throws
// DomainError when fewer than n such edges exist.
OraclePtr delta_u(const OraclePtr& g, std::int64_t r, std::size_t n, std::size_t k);

// Components of the depth >= n part of window(g, R). For each pair of
// components, one new vertex is subdivided into an edge of each and the two
// are joined by k-2 parallel edges. The new vertices of one component sit on
// a single edge: one inside the component if any, else one from it up to
// depth n - 1. A single component leaves g unchanged. Throws DomainError when
// a component has no edge other than self-loops.
OraclePtr delta_v(const OraclePtr& g, std::int64_t n, std::size_t k, std::int64_t R);

}  // namespace endgraph
