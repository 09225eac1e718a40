#include <set>

#include "doctest.h"
#include "endgraph/ball.hpp"
#include "endgraph/builtins.hpp"
#include "endgraph/ends.hpp"
#include "endgraph/errors.hpp"
#include "endgraph/phe.hpp"
#include "endgraph/spec_file.hpp"

using namespace endgraph;

namespace {

StandardGraphDescriptor desc(const char* text) { return parse_descriptor(text); }

// Brute-force enumeration of finite word sets by (total size, lex) order.
std::vector<std::vector<Word>> brute_clopens(std::size_t count) {
    std::vector<Word> words;
    for (std::size_t len = 0; len <= 4; ++len)
        for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
            Word w(len, '0');
            for (std::size_t i = 0; i < len; ++i)
                if ((bits >> (len - 1 - i)) & 1) w[i] = '1';
            words.push_back(w);
        }
    // (weight, word indices); indices follow the (length, lex) word order.
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sets;
    const std::size_t m = 12;  // enough words for every set of weight <= 6
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
        std::vector<std::size_t> s;
        std::size_t weight = 0;
        for (std::size_t i = 0; i < m; ++i)
            if ((mask >> i) & 1) {
                s.push_back(i);
                weight += words[i].size() + 1;
            }
        if (weight <= 6) sets.emplace_back(weight, s);
    }
    std::sort(sets.begin(), sets.end());
    std::vector<std::vector<Word>> out;
    for (std::size_t i = 0; i < sets.size() && out.size() < count; ++i) {
        out.emplace_back();
        for (auto j : sets[i].second) out.back().push_back(words[j]);
    }
    return out;
}

}  // namespace

TEST_SUITE("phe") {
    TEST_CASE("equivalence compares rank and end pair") {
        CHECK(phe_equivalent(desc("rank=inf ends=1 loopends=1"), desc("rank=inf ends=1 loopends=1")));
        CHECK_FALSE(phe_equivalent(desc("rank=2 ends=1 loopends=0"), desc("rank=3 ends=1 loopends=0")));
        CHECK_FALSE(phe_equivalent(desc("rank=inf endpair=cantor:all"), desc("rank=inf endpair=cantor:clopen")));
    }

    TEST_CASE("invalid descriptors are rejected") {
        CHECK_THROWS_AS(desc("rank=2 ends=1 loopends=1"), ParseError);
        CHECK_THROWS_AS(desc("rank=inf ends=2 loopends=0"), ParseError);
        CHECK_THROWS_AS(desc("rank=inf endpair=omega+1:0"), ParseError);
    }

    TEST_CASE("space tags") {
        CHECK(parse_space("3").to_string() == "3");
        CHECK(parse_space("<=4").to_string() == "<=4");
        CHECK(parse_space("<inf").to_string() == "<inf");
        CHECK_THROWS_AS(parse_space("<=x"), DomainError);
        CHECK_THROWS_AS(parse_space("65"), DomainError);
    }

    TEST_CASE("realized graphs carry their descriptor and match it") {
        struct Case {
            const char* descriptor;
            const char* space;
            std::int64_t persistent;
        };
        for (const Case& c : {Case{"rank=inf ends=1 loopends=1", "3", 1}, Case{"rank=inf ends=3 loopends=3", "4", 3},
                              Case{"rank=2 ends=3 loopends=0", "<inf", 3}, Case{"rank=inf ends=3 loopends=1", "<=5", 3},
                              Case{"rank=0 ends=2 loopends=0", "<=3", 2}}) {
            CAPTURE(c.descriptor);
            const auto d = desc(c.descriptor);
            const auto g = realize(d, parse_space(c.space));
            REQUIRE(g->descriptor().has_value());
            CHECK(phe_equivalent(*g->descriptor(), d));
            CHECK(component_tree(*g, 10, 12).persistent_branches().size() == static_cast<std::size_t>(c.persistent));
            if (!d.rank.is_infinite()) CHECK(rank_lower_bound(*g, 14) == static_cast<std::int64_t>(d.rank.value()));
        }
        CHECK(is_k_regular_within(*realize(desc("rank=inf ends=2 loopends=2"), parse_space("5")), 5, 8));
    }

    TEST_CASE("impossible and unsupported requests") {
        try {
            realize(desc("rank=2 ends=2 loopends=0"), parse_space("3"));
            FAIL("expected DomainError");
        } catch (const DomainError& e) {
            CHECK(std::string(e.what()).starts_with("unrealizable:"));
        }
        CHECK_THROWS_AS(realize(desc("rank=inf endpair=omega+1:1"), parse_space("4")), DomainError);
    }

    TEST_CASE("distinguishing is one-sided") {
        const auto loch = builtins::loch_ness();
        const auto tree = builtins::regular_tree(3);
        CHECK(phe_distinguish(*loch, *tree, 10).distinguished);
        const auto same = phe_distinguish(*tree, *builtins::regular_tree(3), 10);
        CHECK_FALSE(same.distinguished);
        FiniteMultigraph point("point");
        point.add_vertex("p");
        point.set_root("p");
        const auto unknown = phe_distinguish(*make_oracle(point), *tree, 10);
        CHECK_FALSE(unknown.distinguished);
        CHECK(unknown.reason.empty());
    }

    TEST_CASE("stone structures") {
        const auto a = stone_structure(desc("rank=1 ends=2 loopends=0"));
        CHECK(a.n == 2);
        CHECK(a.K.size() == 4);
        CHECK(a.L.size() == 1);
        CHECK(validation_error(a).empty());
        CHECK(structures_isomorphic(a, stone_structure(desc("rank=1 ends=2 loopends=0"))));
        CHECK_FALSE(structures_isomorphic(a, stone_structure(desc("rank=2 ends=2 loopends=0"))));
        const auto b = stone_structure(desc("rank=inf ends=3 loopends=2"));
        CHECK(b.n == 0);
        CHECK(b.K.size() == 8);
        CHECK(b.L.size() == 4);
        CHECK_FALSE(structures_isomorphic(b, stone_structure(desc("rank=inf ends=3 loopends=1"))));
        auto broken = a;
        broken.f[0] = broken.L.size();
        CHECK_FALSE(validation_error(broken).empty());
    }

    TEST_CASE("clopen descriptions follow the size-then-lex order") {
        const auto brute = brute_clopens(12);
        for (std::size_t i = 0; i < brute.size(); ++i) {
            CAPTURE(i);
            const auto words = clopen_description(i).words;
            CHECK(std::set<Word>(brute[i].begin(), brute[i].end()) == std::set<Word>(words.begin(), words.end()));
        }
        CHECK(doubled_clopen_description(6) == clopen_description(3));
        CHECK(doubled_clopen_description(7) == clopen_description(3));
    }

    TEST_CASE("deduplicated enumeration of the full space") {
        const auto full = ClosedSetSpec::full();
        const auto d = dedup_enumeration(full, full, 20, 3);
        CHECK(d.rho == std::vector<std::size_t>{0, 2, 4, 6, 12, 14, 16, 18});
        CHECK(d.rho_loop == d.rho);
        CHECK(clopen_enumeration(full, 2, 2) == std::vector<Word>{"00", "01", "10", "11"});
        CHECK(clopen_trace(full, clopen_description(2), 2) == std::vector<Word>{"00", "01"});
    }
}
