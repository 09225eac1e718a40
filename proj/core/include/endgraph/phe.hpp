#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "endgraph/closed_set.hpp"
#include "endgraph/descriptor.hpp"
#include "endgraph/graph.hpp"

namespace endgraph {

// Proper homotopy equivalence of the graphs the descriptors denote. Throws
// DomainError if either descriptor is invalid.
bool phe_equivalent(const StandardGraphDescriptor& a, const StandardGraphDescriptor& b);

// Target space of a realization: k-regular graphs, graphs of degree <= k, or
// all locally finite graphs.
struct SpaceTag {
    enum class Kind { Regular, AtMost, Any };
    Kind kind = Kind::Any;
    std::size_t k = 0;

    std::string to_string() const;
};

// "3" (k-regular), "<=3", "<inf".
SpaceTag parse_space(std::string_view text);

// A descriptor-backed oracle in the requested space. Throws DomainError when
// the pair is impossible there ("unrealizable: ...") or outside the supported
// constructions ("unsupported: ...").
OraclePtr realize(const StandardGraphDescriptor& d, SpaceTag space);

struct PheVerdict {
    bool distinguished = false;
    std::string reason;  // empty for Unknown
};

// Sound one-sided check: distinguished only on differing descriptors or a
// certified finite rank exceeded by the other graph's ball rank within
// `budget`.
PheVerdict phe_distinguish(const GraphOracle& g1, const GraphOracle& g2, std::int64_t budget);

// Finite Boolean algebra given by its operation tables.
struct BooleanAlgebra {
    std::vector<std::string> elements;
    std::vector<std::vector<std::size_t>> join;
    std::vector<std::vector<std::size_t>> meet;
    std::vector<std::size_t> complement;
    std::size_t zero = 0;
    std::size_t one = 0;

    std::size_t size() const { return elements.size(); }
};

// (n, K, L, f) with f : K -> L.
struct CountableStructure {
    std::uint64_t n = 0;
    BooleanAlgebra K;
    BooleanAlgebra L;
    std::vector<std::size_t> f;
};

// n = rank + 1 (0 for infinite rank), K = subsets of the ends, L = subsets of
// the loop ends, f(Y) = Y intersected with the loop ends. FinitePair only.
CountableStructure stone_structure(const StandardGraphDescriptor& d);

// Empty when the structure satisfies the Boolean axioms, f is a surjective
// homomorphism and the carriers are disjoint; otherwise the first failure.
std::string validation_error(const CountableStructure& s);

bool structures_isomorphic(const CountableStructure& a, const CountableStructure& b);

// A clopen subset of Cantor space as a finite union of cylinders.
struct ClopenDescription {
    std::vector<Word> words;  // sorted by (length, lexicographic), distinct
    std::string to_string() const;
    friend bool operator==(const ClopenDescription&, const ClopenDescription&) = default;
};

// O'_i: finite word sets ordered by total size sum(|w| + 1), then
// lexicographically. O'_0 is empty, O'_1 = {e} is the whole space.
ClopenDescription clopen_description(std::size_t i);

// O_i = O'_(i / 2), so every clopen set is listed twice in a row.
ClopenDescription doubled_clopen_description(std::size_t i);

// Words of length `depth` in C having a prefix in the description.
std::vector<Word> clopen_trace(const ClosedSetSpec& c, const ClopenDescription& o, std::size_t depth);

// Trace of O_i on C at the given depth.
std::vector<Word> clopen_enumeration(const ClosedSetSpec& c, std::size_t i, std::size_t depth);

// Indices i < count whose traces O_i n C (resp. O_i n C_loop) at `depth` are
// new, in increasing order.
struct Deduplication {
    std::vector<std::size_t> rho;
    std::vector<std::size_t> rho_loop;
};
Deduplication dedup_enumeration(const ClosedSetSpec& ends, const ClosedSetSpec& loop_ends, std::size_t count,
                                std::size_t depth);

}  // namespace endgraph
