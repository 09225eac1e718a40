#include <map>

#include "doctest.h"
#include "endgraph/ball.hpp"
#include "endgraph/builtins.hpp"
#include "endgraph/ends.hpp"
#include "endgraph/errors.hpp"
#include "endgraph/genericity.hpp"

using namespace endgraph;

namespace {

// Multigraph shape on v0, v1 as the sorted list of edge endpoint pairs.
std::string shape(const FiniteMultigraph& g) {
    std::vector<std::string> edges;
    for (const auto& e : g.edge_ids()) {
        auto [u, v] = g.endpoints(e);
        if (v < u) std::swap(u, v);
        edges.push_back(u + "-" + v);
    }
    std::sort(edges.begin(), edges.end());
    std::string out;
    for (const auto& e : edges) out += e + " ";
    return out;
}

}  // namespace

TEST_SUITE("genericity") {
    TEST_CASE("configuration model on two cubic vertices") {
        // 15 matchings of 6 stubs: 6 give a triple edge, 9 give two loops and a bridge.
        std::map<std::string, int> counts;
        const int samples = 3000;
        for (int s = 0; s < samples; ++s) {
            const auto g = sample_configuration(3, 2, static_cast<std::uint64_t>(s));
            CHECK(g.degree("v0") == 3);
            CHECK(g.degree("v1") == 3);
            ++counts[shape(g)];
        }
        REQUIRE(counts.size() == 2);
        const double triple = counts["v0-v1 v0-v1 v0-v1 "] / double(samples);
        CHECK(triple == doctest::Approx(6.0 / 15).epsilon(0.1));
    }

    TEST_CASE("samples are regular and reproducible") {
        const auto a = sample_configuration(5, 40, 9);
        CHECK(a == sample_configuration(5, 40, 9));
        CHECK_FALSE(a == sample_configuration(5, 40, 10));
        for (const auto& v : a.vertices()) CHECK(a.degree(v) == 5);
        CHECK(a.edge_count() == 100);
        CHECK_THROWS_AS(sample_configuration(3, 5, 1), DomainError);
    }

    TEST_CASE("seed derivation") {
        CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
        CHECK(trial_seed(42, 0) == splitmix64(42 + 0x9e3779b97f4a7c15ULL));
        CHECK(trial_seed(42, 1) != trial_seed(42, 0));
    }

    TEST_CASE("experiments do not depend on the thread count") {
        ExperimentConfig cfg;
        cfg.N = 100;
        cfg.trials = 20;
        cfg.seed = 5;
        const auto one = run_experiment(cfg, 1);
        const auto four = run_experiment(cfg, 4);
        CHECK(one.to_csv() == four.to_csv());
        CHECK(one.records.size() == 20);
        CHECK(one.to_csv().starts_with("trial,seed,rank_ball_R,in_Un,in_Vn_witness_radius\n"));
    }

    TEST_CASE("edge cases of the configuration") {
        ExperimentConfig cfg;
        cfg.N = 10;
        cfg.trials = 0;
        const auto none = run_experiment(cfg);
        CHECK(none.records.empty());
        CHECK(none.fraction_in_Un() == 0.0);
        cfg.trials = 5;
        cfg.n = 0;
        // Every graph has a cycle-free empty ball and one depth-0 vertex.
        const auto zero = run_experiment(cfg);
        CHECK(zero.fraction_in_Vn() == 1.0);
        cfg.n = 9;
        CHECK_THROWS_AS(run_experiment(cfg), DomainError);
        cfg.n = 3;
        cfg.N = 7;
        CHECK_THROWS_AS(cfg.validate(), DomainError);
    }

    TEST_CASE("delta_u keeps the ball and adds cycles") {
        const auto ray = builtins::ray();
        const auto d = delta_u(ray, 4, 3, 3);
        CHECK(in_basic_open(*ray, HalfRadius::whole(4), *d));
        CHECK(rank_lower_bound(*d, 20) == 3);
        CHECK(distance(*ray, *d, 20).to_string().starts_with("exact"));
        const auto t = builtins::regular_tree(5);
        const auto d5 = delta_u(t, 2, 2, 5);
        CHECK(is_k_regular_within(*d5, 5, 6));
        CHECK(rank_lower_bound(*d5, 8) >= 2);
        CHECK_THROWS_AS(delta_u(make_oracle(sample_configuration(3, 2, 1)), 3, 1, 3), DomainError);
    }

    TEST_CASE("delta_v joins the components below n") {
        for (std::size_t k : {3, 4, 5}) {
            const auto t = builtins::regular_tree(k);
            CHECK_FALSE(in_V_n(*t, 1, 8));
            const auto d = delta_v(t, 1, k, 8);
            CHECK(in_basic_open(*t, HalfRadius::whole(1), *d));
            CHECK(in_V_n(*d, 1, 8));
            CHECK(is_k_regular_within(*d, k, 6));
        }
        const auto ray = builtins::ray();
        CHECK(delta_v(ray, 2, 3, 6) == ray);
    }
}
