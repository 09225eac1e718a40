#include "doctest.h"
#include "endgraph/closed_set.hpp"
#include "endgraph/errors.hpp"

using namespace endgraph;

TEST_SUITE("closed_set") {
    TEST_CASE("membership by presentation") {
        CHECK(ClosedSetSpec::full().contains("0101"));
        const auto s = parse_closed_set("closedset singleton 01(10)^w");
        CHECK(s.is_singleton());
        CHECK(s.contains(""));
        CHECK(s.contains("0110101"));
        CHECK_FALSE(s.contains("00"));
        const auto c = parse_closed_set("closedset cylinders 00 1");
        CHECK(c.contains("0"));
        CHECK(c.contains("0011"));
        CHECK_FALSE(c.contains("01"));
        CHECK(c.contains("1010"));
    }

    TEST_CASE("automaton accepts prefixes visiting accepting states") {
        // Words with no two consecutive 1s.
        const auto a = parse_closed_set("closedset dfa 2 0.0=0,0.1=1,1.0=0 0,1");
        CHECK(a.contains("0100101"));
        CHECK_FALSE(a.contains("0110"));
        CHECK(validate_closed_set(a, 8).valid());
    }

    TEST_CASE("text round trip") {
        for (const char* text : {"closedset full", "closedset singleton 01(10)^w", "closedset cylinders e",
                                 "closedset cylinders 00 011 10", "closedset dfa 2 0.0=0,0.1=1,1.0=0 0,1"}) {
            const auto c = parse_closed_set(text);
            CHECK(to_string(c) == text);
            CHECK(parse_closed_set(to_string(c)) == c);
        }
    }

    TEST_CASE("dead ends and empty sets are rejected") {
        const auto dead = parse_closed_set("closedset dfa 2 0.0=1 0,1");
        CHECK_FALSE(validate_closed_set(dead, 4).valid());
        CHECK_THROWS_AS(require_valid(dead), DomainError);
        CHECK_THROWS_AS(parse_closed_set("closedset cylinders"), ParseError);
        CHECK_NOTHROW(require_valid(ClosedSetSpec::full()));
    }

    TEST_CASE("parse errors carry columns") {
        try {
            parse_closed_set("closedset cylinders 00 0x1");
            FAIL("expected ParseError");
        } catch (const ParseError& e) {
            CHECK(e.line() == 1);
            CHECK(e.column() == 24);
        }
        CHECK_THROWS_AS(parse_closed_set("closedset wat"), ParseError);
        CHECK_THROWS_AS(parse_closed_set("closedset singleton 01"), ParseError);
    }

    TEST_CASE("empty word display") {
        CHECK(show_word("") == "e");
        CHECK(show_word("01") == "01");
    }
}
