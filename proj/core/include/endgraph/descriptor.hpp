#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>

namespace endgraph {

// Rank of a graph (or genus of a surface): a natural number or infinity.
class Rank {
public:
    constexpr Rank() = default;
    constexpr explicit Rank(std::uint64_t finite) : value_(finite) {}
    static constexpr Rank infinite() {
        Rank r;
        r.value_.reset();
        return r;
    }

    constexpr bool is_infinite() const { return !value_.has_value(); }
    constexpr std::uint64_t value() const { return *value_; }

    friend constexpr bool operator==(const Rank&, const Rank&) = default;

    std::string to_string() const;

private:
    std::optional<std::uint64_t> value_{0};
};

// n ends, the first `loop_ends` of which are accumulated by loops.
struct FinitePair {
    std::uint32_t ends = 1;
    std::uint32_t loop_ends = 0;
    friend bool operator==(const FinitePair&, const FinitePair&) = default;
};

// ({1/n} u {0}, E_loop) with E_loop either {0} or empty.
struct ConvergentSequence {
    bool limit_in_loops = true;
    friend bool operator==(const ConvergentSequence&, const ConvergentSequence&) = default;
};

enum class CantorLoopPart { Empty, All, ProperClopen };

struct CantorPair {
    CantorLoopPart loop_part = CantorLoopPart::All;
    friend bool operator==(const CantorPair&, const CantorPair&) = default;
};

using EndPairDescriptor = std::variant<FinitePair, ConvergentSequence, CantorPair>;

// Rank plus endspace pair: the complete proper-homotopy invariant of an
// infinite locally finite graph, restricted to a decidable catalog.
struct StandardGraphDescriptor {
    Rank rank;
    EndPairDescriptor endpair;
    friend bool operator==(const StandardGraphDescriptor&, const StandardGraphDescriptor&) = default;
};

// True when the pair's loop part is nonempty.
bool has_loop_ends(const EndPairDescriptor& endpair);

// Empty string when valid, otherwise the violated rule.
std::string validation_error(const StandardGraphDescriptor& d);

// Throws DomainError naming the violated rule.
void validate(const StandardGraphDescriptor& d);

// Canonical one-line text, e.g. "descriptor rank=inf ends=1 loopends=1".
std::string to_string(const StandardGraphDescriptor& d);
std::string to_string(const EndPairDescriptor& e);

}  // namespace endgraph
