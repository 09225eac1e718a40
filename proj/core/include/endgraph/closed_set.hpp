#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace endgraph {

// Binary words are strings over {'0','1'}.
using Word = std::string;

namespace closed {

struct Full {
    friend bool operator==(const Full&, const Full&) = default;
};

// The single point prefix . period^omega (period nonempty).
struct Singleton {
    Word prefix;
    Word period;
    friend bool operator==(const Singleton&, const Singleton&) = default;
};

// Union of the cylinders [w] over the listed words.
struct CylinderUnion {
    std::vector<Word> words;
    friend bool operator==(const CylinderUnion&, const CylinderUnion&) = default;
};

// Deterministic automaton over {0,1} starting in state 0. A word belongs to
// the tree when its run is defined and visits only accepting states, so the
// accepted set is prefix-closed by construction.
struct Automaton {
    static constexpr int kNone = -1;
    std::size_t states = 1;
    std::vector<std::array<int, 2>> next;  // next[q][b], kNone when missing
    std::vector<bool> accepting;
    friend bool operator==(const Automaton&, const Automaton&) = default;
};

}  // namespace closed

// A closed subset of Cantor space presented by its tree of prefixes.
class ClosedSetSpec {
public:
    using Presentation = std::variant<closed::Full, closed::Singleton, closed::CylinderUnion, closed::Automaton>;

    ClosedSetSpec() = default;
    ClosedSetSpec(Presentation p) : presentation_(std::move(p)) {}

    static ClosedSetSpec full() { return {closed::Full{}}; }

    const Presentation& presentation() const { return presentation_; }

    // Whether w is a prefix of some point of the set.
    bool contains(std::string_view w) const;

    // Presentation-level singleton test (automata are never singled out).
    bool is_singleton() const { return std::holds_alternative<closed::Singleton>(presentation_); }

    friend bool operator==(const ClosedSetSpec&, const ClosedSetSpec&) = default;

private:
    Presentation presentation_ = closed::Full{};
};

// Exact structural check: nonempty and no dead ends. Throws DomainError
// naming the offending word.
void require_valid(const ClosedSetSpec& c);

struct ClosedSetReport {
    std::vector<std::string> violations;
    std::vector<std::string> warnings;
    bool valid() const { return violations.empty(); }
};

// Bounded check of nonemptiness, prefix-closure and prunedness on every word
// of length <= depth.
ClosedSetReport validate_closed_set(const ClosedSetSpec& c, std::size_t depth);

// Printable word; the empty word is shown as "e".
std::string show_word(std::string_view w);

// Text form, one line:
//   closedset full
//   closedset singleton <u>(<v>)^w
//   closedset cylinders <w1> <w2> ...
//   closedset dfa <states> <q.b=q',...> <accepting q,q,...>
// The empty word is written "e".
std::string to_string(const ClosedSetSpec& c);
ClosedSetSpec parse_closed_set(std::string_view text);

}  // namespace endgraph
