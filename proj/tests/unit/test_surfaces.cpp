#include "brute_force.hpp"
#include "doctest.h"
#include "endgraph/ball.hpp"
#include "endgraph/builtins.hpp"
#include "endgraph/errors.hpp"
#include "endgraph/surfaces.hpp"

using namespace endgraph;

namespace {

const char* const kTorus = "pants 0 legs=1\nglue 0.1 0.2\nbase 0\n";
const char* const kSphere = "pants a legs=0\npants b legs=0\nglue a.1 b.1\nbase a\n";
const char* const kGenus2 = "pants a legs=2\npants b legs=2\nglue a.1 b.1\nglue a.2 b.2\nglue a.3 b.3\nbase a\n";

}  // namespace

TEST_SUITE("surfaces") {
    TEST_CASE("self-glued annulus is a torus") {
        const auto p = parse_pants(kTorus);
        const auto g = to_graph(p);
        CHECK(g.vertex_count() == 1);
        CHECK(g.edge_count() == 1);
        CHECK(g.endpoints(g.edge_ids()[0]).is_loop());
        CHECK(euler_characteristic(p) == 0);
        CHECK(genus(p) == 1);
    }

    TEST_CASE("genus from the graph and from chi agree") {
        CHECK(genus(parse_pants(kSphere)) == 0);
        CHECK(genus(parse_pants(kGenus2)) == 2);
        CHECK(euler_characteristic(parse_pants(kGenus2)) == -2);
        const auto g = to_graph(parse_pants(kGenus2));
        CHECK(testing::brute_rank(g) == 2);
        for (const auto& v : g.vertices()) CHECK(g.degree(v) == 3);
    }

    TEST_CASE("text round trip") {
        for (const char* text : {kTorus, kSphere, kGenus2}) {
            const auto p = parse_pants(text);
            CHECK(parse_pants(to_text(p)) == p);
        }
    }

    TEST_CASE("invalid complexes") {
        CHECK_THROWS_AS(parse_pants("pants a legs=1\nglue a.1 a.1\nbase a\n"), DomainError);
        CHECK_THROWS_AS(parse_pants("pants a legs=1\nbase a\n"), DomainError);
        CHECK_THROWS_AS(parse_pants("pants a legs=0\nglue a.1 a.2\nbase a\n"), DomainError);
        CHECK_THROWS_AS(parse_pants("pants a legs=0\npants a legs=0\nglue a.1 a.1\nbase a\n"), DomainError);
        CHECK_THROWS_AS(parse_pants("pants a legs=0\npants b legs=0\npants c legs=1\npants d legs=1\n"
                                    "glue a.1 b.1\nglue c.1 d.2\nglue c.2 d.1\nbase a\n"),
                        DomainError);
        CHECK_THROWS_AS(parse_pants("pants a legs=x\n"), ParseError);
    }

    TEST_CASE("classification verdicts") {
        const auto torus = parse_pants(kTorus);
        const auto torus2 = parse_pants("pants a legs=1\npants b legs=1\nglue a.2 b.1\nglue b.2 a.1\nbase a\n");
        CHECK(surfaces_homeomorphic(torus, torus2) == Verdict::Yes);
        CHECK(surfaces_homeomorphic(torus, parse_pants(kSphere)) == Verdict::No);
        const SurfaceClass plane{Rank(0), FinitePair{1, 0}};
        const SurfaceClass loch{Rank::infinite(), FinitePair{1, 1}};
        CHECK(surfaces_homeomorphic(annulus_chain(), plane) == Verdict::Yes);
        CHECK(surfaces_homeomorphic(annulus_chain(), loch) == Verdict::No);
        CHECK(surfaces_homeomorphic(torus, plane) == Verdict::No);
        CHECK(to_string(Verdict::Unknown) == "unknown");
    }

    TEST_CASE("the plane's graph is a ray") {
        const auto g = to_graph(annulus_chain());
        CHECK(distance(*g, *builtins::ray(), 24).kind == DyadicDistance::Kind::UpperBound);
        CHECK(annulus_chain()->partner({annulus_chain()->base(), 1}).circle == 1);
        CHECK_THROWS_AS(annulus_chain()->legs("nope"), DomainError);
    }

    TEST_CASE("surface classes map to graph descriptors") {
        const auto d = as_graph_descriptor({Rank::infinite(), CantorPair{CantorLoopPart::All}});
        CHECK(d.rank.is_infinite());
        CHECK_THROWS_AS(as_graph_descriptor({Rank(1), FinitePair{1, 1}}), DomainError);
    }
}
