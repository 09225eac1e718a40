#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "endgraph/descriptor.hpp"
#include "endgraph/graph.hpp"

namespace endgraph {

// Boundary circle `circle` (1-based, 1 .. legs + 1) of pants `pants`.
struct CircleRef {
    std::string pants;
    std::uint32_t circle = 1;
    friend auto operator<=>(const CircleRef&, const CircleRef&) = default;
};

std::string to_string(const CircleRef& c);

// A d-legged pants is a sphere with d + 1 boundary circles; d = 0 is a disk.
struct Pants {
    std::string id;
    std::uint32_t legs = 0;
    friend bool operator==(const Pants&, const Pants&) = default;
};

// Finite pants complex: every circle glued to exactly one other circle.
struct PantsComplex {
    std::vector<Pants> pants;
    std::vector<std::pair<CircleRef, CircleRef>> glue;
    std::string base;
    friend bool operator==(const PantsComplex&, const PantsComplex&) = default;
};

// Empty when the gluing is a perfect matching of the circles, ids are
// distinct, the base exists and the glued surface is connected.
std::string validation_error(const PantsComplex& p);
void validate(const PantsComplex& p);

// "pants <id> legs=<d>", "glue <id>.<i> <id'>.<i'>", "base <id>".
PantsComplex parse_pants(std::string_view text);
std::string to_text(const PantsComplex& p);

// Genus and end pair of a noncompact surface.
struct SurfaceClass {
    Rank genus;
    EndPairDescriptor endpair;
    friend bool operator==(const SurfaceClass&, const SurfaceClass&) = default;
};

StandardGraphDescriptor as_graph_descriptor(const SurfaceClass& s);

// Lazily presented infinite pants complex.
class PantsOracle {
public:
    virtual ~PantsOracle() = default;
    virtual std::string base() const = 0;
    // Throws DomainError for unknown pants.
    virtual std::uint32_t legs(const std::string& pants) const = 0;
    virtual CircleRef partner(const CircleRef& c) const = 0;
    virtual std::optional<SurfaceClass> surface_class() const { return std::nullopt; }
    virtual std::string provenance() const = 0;
};
using PantsOraclePtr = std::shared_ptr<const PantsOracle>;

// A disk followed by annuli A1, A2, ...: the plane, whose puncture is a ray.
PantsOraclePtr annulus_chain();

// One vertex per pants (same id), one edge per glued pair, rooted at the
// base. Edge "<a>~<b>" with a < b the two circles.
FiniteMultigraph to_graph(const PantsComplex& p);
OraclePtr to_graph(const PantsOraclePtr& p);

// Sum of (1 - legs) over the pants.
std::int64_t euler_characteristic(const PantsComplex& p);

// Rank of the graph; throws DomainError if (2 - chi) / 2 disagrees.
std::int64_t genus(const PantsComplex& p);

enum class Verdict { Yes, No, Unknown };
std::string to_string(Verdict v);

using SurfaceInput = std::variant<PantsComplex, PantsOraclePtr, SurfaceClass>;

// Closed complexes compare by genus; compact and noncompact never match;
// noncompact surfaces compare by class when both are known.
Verdict surfaces_homeomorphic(const SurfaceInput& a, const SurfaceInput& b);

}  // namespace endgraph
