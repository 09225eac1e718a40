#include "doctest.h"
#include "endgraph/ball.hpp"
#include "endgraph/builtins.hpp"
#include "endgraph/closed_set.hpp"
#include "endgraph/ends.hpp"
#include "endgraph/errors.hpp"
#include "endgraph/reductions.hpp"

using namespace endgraph;

namespace {

const char* const kSets[] = {"closedset full", "closedset cylinders 00 011 10 110 111",
                             "closedset dfa 3 0.0=1,0.1=2,1.0=1,2.1=2 0,1,2", "closedset singleton 0(1)^w"};

}  // namespace

TEST_SUITE("reductions") {
    TEST_CASE("pruned tree follows the closed set") {
        const auto c = parse_closed_set("closedset cylinders 00 1");
        const auto t = gamma_star(c);
        CHECK(t->root() == "T");
        CHECK(degree(*t, "T") == 2);
        CHECK(degree(*t, "T0") == 2);  // parent and the single child 00
        CHECK_THROWS_AS(t->incident("T01"), DomainError);
    }

    TEST_CASE("constructions are k-regular") {
        for (const char* text : kSets) {
            const auto c = parse_closed_set(text);
            CAPTURE(text);
            CHECK(is_k_regular_within(*gamma_3(c), 3, 10));
            for (std::size_t k = 4; k <= 8; ++k) CHECK(is_k_regular_within(*gamma_k(c, k), k, 10));
        }
    }

    TEST_CASE("singletons give the loch ness monster") {
        const auto c = parse_closed_set("closedset singleton 0(1)^w");
        CHECK(distance(*gamma_3(c), *builtins::loch_ness(), 16).kind == DyadicDistance::Kind::UpperBound);
    }

    TEST_CASE("descriptors of the constructions") {
        const auto d = gamma_3(ClosedSetSpec::full())->descriptor();
        REQUIRE(d.has_value());
        CHECK(d->rank.is_infinite());
        CHECK(to_string(*d) == "descriptor rank=inf endpair=cantor:all");
    }

    TEST_CASE("every degree-6 grouping yields a 4-regular graph") {
        const auto c = parse_closed_set("closedset cylinders 00 011 10 110 111");
        for (std::uint8_t mask = 0; mask < 64; ++mask) {
            const EdgeEndGrouping grouping{mask};
            if (!grouping.valid()) continue;
            CHECK(is_k_regular_within(*gamma_k(c, 4, grouping), 4, 8));
        }
        CHECK_THROWS_AS(gamma_k(c, 4, EdgeEndGrouping{0b000011}), DomainError);
    }

    TEST_CASE("k out of range") {
        CHECK_THROWS_AS(gamma_k(ClosedSetSpec::full(), 2), DomainError);
        CHECK_THROWS_AS(gamma_k(ClosedSetSpec::full(), 65), DomainError);
    }

    TEST_CASE("vertex decoding") {
        const auto c = ClosedSetSpec::full();
        const auto star = decode_vertex(c, 0, "T01");
        CHECK(star.role == ConstructionTrace::Role::TreeVertex);
        CHECK(star.word == "01");
        for (std::size_t k : {3, 4, 5, 6}) {
            const auto g = k == 3 ? gamma_3(c) : gamma_k(c, k);
            for (const auto& v : window(*g, 6).ids) CHECK_NOTHROW(decode_vertex(c, k, v));
        }
        CHECK_THROWS_AS(decode_vertex(c, 3, "nonsense"), DomainError);
    }
}
