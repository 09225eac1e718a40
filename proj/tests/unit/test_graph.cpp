#include <random>

#include "brute_force.hpp"
#include "doctest.h"
#include "endgraph/builtins.hpp"
#include "endgraph/errors.hpp"
#include "endgraph/graph_io.hpp"

using namespace endgraph;

namespace {

FiniteMultigraph theta() {
    return parse_graph("graph theta root=a\nv a\nv b\ne x a b\ne y a b\ne z a b\n");
}

}  // namespace

TEST_SUITE("graph") {
    TEST_CASE("loops count twice toward degree") {
        FiniteMultigraph g;
        g.add_vertex("a");
        g.add_edge("l", "a", "a");
        g.set_root("a");
        CHECK(g.degree("a") == 2);
        CHECK(rank(g) == 1);
        CHECK(g.endpoints("l").is_loop());
    }

    TEST_CASE("rank is the first Betti number") {
        CHECK(rank(theta()) == 2);
        std::mt19937_64 rng(7);
        for (int i = 0; i < 50; ++i) {
            const auto g = testing::random_multigraph(rng, 1 + rng() % 7, rng() % 6);
            CHECK(rank(g) == testing::brute_rank(g));
        }
    }

    TEST_CASE("text round trip preserves ids and order") {
        const auto g = theta();
        CHECK(parse_graph(to_text(g)) == g);
        CHECK(g.edge_ids() == std::vector<EdgeId>{"x", "y", "z"});
    }

    TEST_CASE("parser reports line and column") {
        try {
            parse_graph("graph g root=a\nv a\ne x a missing\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 3);
            CHECK(std::string(e.what()).starts_with("3:"));
        }
        CHECK_THROWS_AS(parse_graph("graph g root=a\nv a\nv a\n"), ParseError);
        CHECK_THROWS_AS(parse_graph("graph g root=a\nv a\nq\n"), ParseError);
    }

    TEST_CASE("duplicate ids are rejected") {
        FiniteMultigraph g;
        g.add_vertex("a");
        CHECK_THROWS_AS(g.add_vertex("a"), DomainError);
        g.add_edge("e", "a", "a");
        CHECK_THROWS_AS(g.add_edge("e", "a", "a"), DomainError);
        CHECK_THROWS_AS(g.add_edge("f", "a", "b"), DomainError);
    }

    TEST_CASE("root component drops the rest") {
        auto g = theta();
        g.add_vertex("c");
        CHECK(component_count(g) == 2);
        const auto h = root_component(g);
        CHECK(h.vertex_count() == 2);
        CHECK(is_connected(h));
    }

    TEST_CASE("surgery moves") {
        auto g = theta();
        const auto mid = surgery::subdivide(g, "x");
        CHECK(g.degree(mid) == 2);
        CHECK(rank(g) == 2);
        const auto tip = surgery::lollipop(g, "a");
        CHECK(g.degree(tip) == 3);
        CHECK(rank(g) == 3);
        const auto doubled = double_edges(theta());
        CHECK(doubled.edge_count() == 6);
        CHECK(doubled.degree("a") == 6);
    }

    TEST_CASE("degree-6 split keeps the Betti number for every grouping") {
        std::size_t groupings = 0;
        for (std::uint8_t mask = 0; mask < 64; ++mask) {
            const EdgeEndGrouping grouping{mask};
            if (!grouping.valid()) continue;
            ++groupings;
            auto g = double_edges(theta());
            const auto [x, y] = surgery::split6(g, "a", grouping);
            CHECK(g.degree(x) == 4);
            CHECK(g.degree(y) == 4);
            CHECK(rank(g) == 5);
            CHECK(is_connected(g));
        }
        CHECK(groupings == 20);
    }

    TEST_CASE("oracle of a finite graph agrees with it") {
        const auto g = theta();
        const auto o = make_oracle(g);
        CHECK(o->root() == "a");
        CHECK(degree(*o, "b") == 3);
        CHECK_THROWS_AS(o->incident("nope"), DomainError);
    }

    TEST_CASE("builtin registry") {
        CHECK(builtins::names().size() == 6);
        for (const auto& name : builtins::names()) CHECK(builtins::by_name(name)->provenance().find(name) != std::string::npos);
        CHECK(degree(*builtins::by_name("tree:5"), builtins::by_name("tree:5")->root()) == 5);
        CHECK_THROWS_AS(builtins::by_name("nope"), DomainError);
        CHECK_THROWS_AS(builtins::by_name("tree:x"), DomainError);
    }

    TEST_CASE("regularity check") {
        CHECK(is_k_regular_within(*builtins::regular_tree(4), 4, 6));
        CHECK(is_k_regular_within(*builtins::loch_ness(), 3, 10));
        CHECK_FALSE(is_k_regular_within(*builtins::ray(), 3, 3));
    }
}
