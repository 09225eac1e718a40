#include "doctest.h"
#include "endgraph/ball.hpp"
#include "endgraph/builtins.hpp"
#include "endgraph/errors.hpp"
#include "endgraph/spec_file.hpp"

using namespace endgraph;

TEST_SUITE("spec_file") {
    TEST_CASE("every kind round trips") {
        for (const char* text : {
                 "graph g root=a\nv a\nv b\ne x a b\ne l b b\n",
                 "builtin loch_ness\n",
                 "builtin tree:6\n",
                 "gamma 5 closedset cylinders 00 1\n",
                 "gamma 0 closedset full\n",
                 "closedset singleton 0(1)^w\n",
                 "descriptor rank=inf ends=2 loopends=1\n",
                 "descriptor rank=3 endpair=omega+1:0\n",
                 "pants a legs=1\npants b legs=1\nglue a.1 b.2\nglue a.2 b.1\nbase a\n",
             }) {
            CAPTURE(text);
            const auto s = parse_spec(text);
            CHECK(print_spec(s) == text);
            CHECK(parse_spec(print_spec(s)) == s);
        }
    }

    TEST_CASE("descriptor shorthand") {
        const auto d = parse_descriptor("rank=inf endpair=cantor:clopen");
        CHECK(std::holds_alternative<CantorPair>(d.endpair));
        CHECK(std::holds_alternative<StandardGraphDescriptor>(parse_spec("rank=0 ends=1 loopends=0")));
        CHECK_THROWS_AS(parse_descriptor("rank=1 rank=2 ends=1 loopends=0"), ParseError);
        CHECK_THROWS_AS(parse_descriptor("rank=1 ends=1 loopends=0 colour=red"), ParseError);
        CHECK_THROWS_AS(parse_descriptor("rank=1 endpair=cantor:all ends=1"), ParseError);
        CHECK_THROWS_AS(parse_descriptor("ends=1 loopends=0"), ParseError);
    }

    TEST_CASE("errors point at the offending token") {
        try {
            parse_spec("gamma 3 closedset cylinders 0x\n");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 1);
            CHECK(e.column() == 29);
        }
        CHECK_THROWS_AS(parse_spec("gamma 2 closedset full\n"), ParseError);
        CHECK_THROWS_AS(parse_spec("builtin nope\n"), ParseError);
        CHECK_THROWS_AS(parse_spec("builtin ray extra\n"), ParseError);
        CHECK_THROWS_AS(parse_spec("wat\n"), ParseError);
        CHECK_THROWS_AS(parse_spec(""), ParseError);
    }

    TEST_CASE("specs resolve to graphs") {
        CHECK(to_oracle(parse_spec("builtin ray\n"))->provenance() == builtins::ray()->provenance());
        const auto g = to_oracle(parse_spec("gamma 4 closedset full\n"));
        CHECK(is_k_regular_within(*g, 4, 6));
        const auto d = to_oracle(parse_spec("rank=inf ends=1 loopends=1"));
        CHECK(d->descriptor().has_value());
        CHECK_THROWS_AS(to_oracle(parse_spec("closedset full\n")), DomainError);
        CHECK(to_oracle(parse_spec("pants a legs=1\nglue a.1 a.2\nbase a\n"))->root() == "a");
    }
}
