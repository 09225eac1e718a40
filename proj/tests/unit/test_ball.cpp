#include <random>

#include "brute_force.hpp"
#include "doctest.h"
#include "endgraph/ball.hpp"
#include "endgraph/builtins.hpp"
#include "endgraph/errors.hpp"
#include "endgraph/graph_io.hpp"

using namespace endgraph;

TEST_SUITE("ball") {
    TEST_CASE("half radii") {
        CHECK(parse_half_radius("1.5").half_steps == 3);
        CHECK(parse_half_radius("2").half_steps == 4);
        CHECK(parse_half_radius("0.5").half_steps == 1);
        CHECK(to_string(HalfRadius{5}) == "2.5");
        CHECK_THROWS_AS(parse_half_radius("1.25"), DomainError);
        CHECK_THROWS_AS(parse_half_radius("-1"), DomainError);
    }

    TEST_CASE("open balls cut edges into stubs") {
        const auto t = builtins::regular_tree(3);
        const Ball half = ball(*t, HalfRadius{1});
        CHECK(half.ids.size() == 1);
        CHECK(half.stubs[0] == 3);
        CHECK(half.rank() == 0);
        const Ball one = ball(*t, HalfRadius::whole(1));
        CHECK(one.ids.size() == 1);
        CHECK(one.edges.empty());
        const Ball b = ball(*t, HalfRadius{3});
        CHECK(b.ids.size() == 4);
        CHECK(b.edges.size() == 3);
        CHECK(b.stub_count() == 6);
        CHECK(check_invariants(b).empty());
    }

    TEST_CASE("loops close inside the ball only when the radius allows") {
        FiniteMultigraph g("g");
        g.add_vertex("r");
        g.add_vertex("s");
        g.add_edge("a", "r", "s");
        g.add_edge("l", "s", "s");
        g.set_root("r");
        const auto o = make_oracle(g);
        // s is at depth 1; the loop needs 1 + 1 + 1 < h.
        CHECK(ball(*o, HalfRadius{3}).rank() == 0);
        CHECK(ball(*o, HalfRadius{3}).stubs[1] == 2);
        CHECK(ball(*o, HalfRadius{4}).rank() == 1);
    }

    TEST_CASE("truncation matches a direct ball") {
        const auto g = builtins::loch_ness();
        const Ball big = ball(*g, HalfRadius::whole(6));
        for (std::int64_t h = 0; h <= 12; ++h)
            CHECK(canonical_code(truncate(big, HalfRadius{h})) == canonical_code(ball(*g, HalfRadius{h})));
    }

    TEST_CASE("canonical code agrees with brute-force isomorphism") {
        std::mt19937_64 rng(11);
        for (int trial = 0; trial < 300; ++trial) {
            const auto g = testing::random_multigraph(rng, 1 + rng() % 6, rng() % 4);
            const auto h = trial % 2 ? testing::relabel(g, rng) : root_component(testing::rewire(g, rng));
            const HalfRadius r{static_cast<std::int64_t>(rng() % 8)};
            const Ball a = ball(g, r);
            const Ball b = ball(h, r);
            const bool brute = testing::brute_isomorphic(a, b);
            CHECK(brute == (canonical_code(a) == canonical_code(b)));
            CHECK(brute == rooted_isomorphic(a, b).has_value());
        }
    }

    TEST_CASE("distance examples") {
        const auto loch = builtins::loch_ness();
        const auto tree = builtins::regular_tree(3);
        const auto d = distance(*loch, *tree, 20);
        CHECK(d.kind == DyadicDistance::Kind::Exact);
        CHECK(d.to_string() == "exact 2^-1/2 0.7071067811865476");
        CHECK(distance(*tree, *tree, 8).kind == DyadicDistance::Kind::UpperBound);
        CHECK(distance(*builtins::ray(), *tree, 8).to_string() == "exact 2^-0/2 1");

        const auto finite = make_oracle(parse_graph("graph g root=a\nv a\nv b\ne x a b\n"));
        CHECK(distance(*finite, *finite, 8).kind == DyadicDistance::Kind::Zero);
        CHECK(distance(*finite, *finite, 8).value() == 0.0);
    }

    TEST_CASE("basic open sets") {
        const auto tree = builtins::regular_tree(3);
        CHECK(in_basic_open(*tree, HalfRadius::whole(3), *tree));
        CHECK(in_basic_open(*tree, HalfRadius{1}, *builtins::loch_ness()));
        CHECK_FALSE(in_basic_open(*tree, HalfRadius{1}, *builtins::ray()));
    }

    TEST_CASE("text and dot renderings name the root") {
        const Ball b = ball(*builtins::ray(), HalfRadius{3});
        CHECK(to_text(b).find("root=") != std::string::npos);
        CHECK(to_dot(b).starts_with("graph"));
        CHECK(to_graph(b).vertex_count() == b.ids.size());
    }
}
