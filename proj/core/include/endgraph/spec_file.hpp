#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "endgraph/closed_set.hpp"
#include "endgraph/descriptor.hpp"
#include "endgraph/graph.hpp"
#include "endgraph/surfaces.hpp"

namespace endgraph {

// "builtin <name>", a registry name such as loch_ness or tree:5.
struct BuiltinSpec {
    std::string name;
    friend bool operator==(const BuiltinSpec&, const BuiltinSpec&) = default;
};

// "gamma <k> closedset ...": k = 0 is the pruned tree, 3 and 4..64 the
// regular constructions.
struct GammaSpec {
    std::size_t k = 3;
    ClosedSetSpec closed_set;
    friend bool operator==(const GammaSpec&, const GammaSpec&) = default;
};

using SpecFile = std::variant<FiniteMultigraph, BuiltinSpec, GammaSpec, ClosedSetSpec, StandardGraphDescriptor, PantsComplex>;

// "[descriptor] rank=<r|inf> ends=<n> loopends=<l>" or
// "[descriptor] rank=<r|inf> endpair=<omega+1:0|omega+1:1|cantor:empty|cantor:all|cantor:clopen>".
StandardGraphDescriptor parse_descriptor(std::string_view text);

// Dispatches on the first keyword: graph, builtin, gamma, closedset,
// descriptor (or rank=), pants/glue/base. Strict; throws ParseError.
SpecFile parse_spec(std::string_view text);

// Canonical text; parse_spec(print_spec(s)) == s.
std::string print_spec(const SpecFile& s);

// Graph denoted by a spec. Descriptors are realized among all locally finite
// graphs; a bare closed set is not a graph and throws DomainError.
OraclePtr to_oracle(const SpecFile& s);

OraclePtr gamma_oracle(std::size_t k, const ClosedSetSpec& c);

}  // namespace endgraph
