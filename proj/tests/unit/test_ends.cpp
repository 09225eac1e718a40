#include "doctest.h"
#include "endgraph/builtins.hpp"
#include "endgraph/closed_set.hpp"
#include "endgraph/ends.hpp"
#include "endgraph/errors.hpp"
#include "endgraph/graph_io.hpp"
#include "endgraph/reductions.hpp"

using namespace endgraph;

TEST_SUITE("ends") {
    TEST_CASE("window keeps every edge among depth <= R vertices") {
        const auto w = window(*builtins::loch_ness(), 3);
        CHECK(w.ids.front() == builtins::loch_ness()->root());
        for (std::size_t i = 0; i < w.ids.size(); ++i) CHECK(w.depth[i] <= 3);
        CHECK(w.rank() == ball(*builtins::loch_ness(), HalfRadius::whole(4)).rank());
    }

    TEST_CASE("ray and tree branch counts") {
        const auto ray = component_tree(*builtins::ray(), 5, 7);
        CHECK(ray.persistent_branches().size() == 1);
        const auto tree = component_tree(*builtins::regular_tree(3), 4, 6);
        CHECK(tree.persistent_branches().size() == 3 * 8);
        CHECK(tree.levels[0].size() == 1);
        CHECK(tree.levels[1].size() == 3);
    }

    TEST_CASE("finite graphs have no persistent branches") {
        const auto g = make_oracle(parse_graph("graph g root=a\nv a\nv b\nv c\ne x a b\ne y b c\ne z c c\n"));
        const auto t = component_tree(*g, 2, 5);
        CHECK(t.persistent_branches().empty());
        CHECK(rank_lower_bound(*g, 5) == 1);
    }

    TEST_CASE("loch ness accumulates loops along its single end") {
        const auto t = component_tree(*builtins::loch_ness(), 6, 8);
        CHECK(t.persistent_branches().size() == 1);
        std::size_t persistent = 0;
        for (const auto& p : loop_accumulation_profile(t))
            if (p.persistent) {
                ++persistent;
                CHECK(still_growing(p, 2));
                CHECK(p.cumulative.front() <= p.cumulative.back());
            }
        CHECK(persistent == 1);
    }

    TEST_CASE("component tree argument checks") {
        CHECK_THROWS_AS(component_tree(*builtins::ray(), 5, 4), DomainError);
        CHECK_THROWS_AS(component_tree(*builtins::ray(), -1, 4), DomainError);
        CHECK_THROWS_AS(rank_lower_bound(*builtins::ray(), -1), DomainError);
    }

    TEST_CASE("V_n membership") {
        // The ray has one vertex per depth.
        CHECK(in_V_n(*builtins::ray(), 3, 5));
        // Distinct subtrees of a tree never reconnect.
        CHECK_FALSE(in_V_n(*builtins::regular_tree(3), 1, 8));
        CHECK(v_n_witness_radius(*builtins::ray(), 2, 6) == std::optional<std::int64_t>(2));
    }

    TEST_CASE("gamma_3 of a cylinder union has one branch per surviving word") {
        const auto c = parse_closed_set("closedset cylinders 00 011 1");
        const auto t = component_tree(*gamma_3(c), 6, 7);
        // Words of length 3 below 00, 011 and 1: 2 + 1 + 4.
        CHECK(t.persistent_branches().size() == 7);
    }

    TEST_CASE("dot rendering") {
        const auto t = component_tree(*builtins::ray(), 2, 3);
        CHECK(to_dot(t).find("digraph") != std::string::npos);
    }
}
