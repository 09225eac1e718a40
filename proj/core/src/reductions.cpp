#include "endgraph/reductions.hpp"

#include <array>

#include "endgraph/builtins.hpp"
#include "endgraph/errors.hpp"

namespace endgraph {

namespace {

enum class Mode { Tree, Subdivided, Doubled, Four };

std::optional<StandardGraphDescriptor> describe(const ClosedSetSpec& c, bool loops) {
    const Rank rank = loops ? Rank::infinite() : Rank(0);
    if (c.is_singleton()) return StandardGraphDescriptor{rank, FinitePair{1, loops ? 1u : 0u}};
    if (std::holds_alternative<closed::Automaton>(c.presentation())) return std::nullopt;
    return StandardGraphDescriptor{rank, CantorPair{loops ? CantorLoopPart::All : CantorLoopPart::Empty}};
}

// Stateless oracle: every vertex id encodes its tree word and role. All
// modes except Tree work on the subdivided tree; the even ones double it.
//   T<w>   tree vertex            S<w>   subdivision vertex above w
//   A<w>   first half of a split  B<w>   second half of a split
//   P<X>   pendant hung on vertex X
class GammaOracle final : public GraphOracle {
public:
    GammaOracle(ClosedSetSpec c, std::size_t k, Mode mode, EdgeEndGrouping grouping)
        : c_(std::move(c)), k_(k), mode_(mode), grouping_(grouping) {
        require_valid(c_);
        if (mode_ == Mode::Four && !grouping_.valid())
            throw DomainError("invalid edge-end grouping: need exactly three of six ends");
        descriptor_ = describe(c_, mode_ != Mode::Tree);
    }

    VertexId root() const override { return vertex_for_end("", 0); }

    std::vector<Incidence> incident(const VertexId& v) const override {
        std::vector<Incidence> out;
        if (v.empty()) unknown(v);
        const char tag = v[0];
        const std::string rest = v.substr(1);
        switch (tag) {
            case 'T':
                tree_incidences(rest, v, out);
                break;
            case 'S':
                subdivision_incidences(rest, v, out);
                break;
            case 'A':
            case 'B':
                split_incidences(rest, tag == 'A', v, out);
                break;
            case 'P': {
                if (pendant_parallel(rest) == 0) unknown(v);
                for (std::size_t i = 0; i < pendant_parallel(rest); ++i)
                    out.push_back({"p" + std::to_string(i) + ":" + rest, rest, false});
                out.push_back({"q:" + rest, v, true});
                break;
            }
            default:
                unknown(v);
        }
        return out;
    }

    std::optional<StandardGraphDescriptor> descriptor() const override { return descriptor_; }

    std::string provenance() const override {
        return "gamma:" + std::to_string(mode_ == Mode::Tree ? 0 : k_) + ":" + to_string(c_);
    }

    ConstructionTrace decode(const VertexId& v) const {
        incident(v);  // validates the id
        ConstructionTrace t;
        switch (mode_) {
            case Mode::Tree:
                t.branch = ConstructionTrace::Branch::Tree;
                break;
            case Mode::Subdivided:
                t.branch = k_ == 3 ? ConstructionTrace::Branch::Three : ConstructionTrace::Branch::Odd;
                break;
            case Mode::Doubled:
                t.branch = ConstructionTrace::Branch::Even;
                break;
            case Mode::Four:
                t.branch = ConstructionTrace::Branch::Four;
                break;
        }
        VertexId at = v;
        if (at[0] == 'P') {
            t.role = ConstructionTrace::Role::Pendant;
            t.host = at.substr(1);
            at = t.host;
        } else {
            switch (at[0]) {
                case 'S':
                    t.role = ConstructionTrace::Role::Subdivision;
                    break;
                case 'A':
                    t.role = ConstructionTrace::Role::SplitFirst;
                    break;
                case 'B':
                    t.role = ConstructionTrace::Role::SplitSecond;
                    break;
                default:
                    t.role = ConstructionTrace::Role::TreeVertex;
            }
        }
        t.word = at.substr(1);
        return t;
    }

private:
    [[noreturn]] static void unknown(const VertexId& v) { throw DomainError("unknown vertex '" + v + "'"); }

    static Word parent(const Word& w) { return w.substr(0, w.size() - 1); }

    std::vector<char> children(const Word& w) const {
        std::vector<char> out;
        for (char b : {'0', '1'})
            if (c_.contains(w + b)) out.push_back(b);
        return out;
    }

    std::size_t tree_degree(const Word& w) const { return (w.empty() ? 0 : 1) + children(w).size(); }

    bool is_split(const Word& w) const { return mode_ == Mode::Four && tree_degree(w) == 3; }

    // Parallel edges of the pendant hung on X, 0 when X carries none.
    std::size_t pendant_parallel(const VertexId& x) const {
        if (mode_ != Mode::Subdivided || x.empty()) return 0;
        const Word w = x.substr(1);
        if (x[0] == 'S') return !w.empty() && c_.contains(w) ? k_ - 2 : 0;
        if (x[0] == 'T') return c_.contains(w) && tree_degree(w) == 2 ? k_ - 2 : 0;
        return 0;
    }

    void add_pendant(const VertexId& x, std::vector<Incidence>& out) const {
        const std::size_t m = pendant_parallel(x);
        for (std::size_t i = 0; i < m; ++i) out.push_back({"p" + std::to_string(i) + ":" + x, "P" + x, false});
    }

    void add_loops(const VertexId& x, std::size_t m, std::vector<Incidence>& out) const {
        for (std::size_t i = 0; i < m; ++i) out.push_back({"o" + std::to_string(i) + ":" + x, x, true});
    }

    // Ends of a doubled tree vertex in the fixed order parent#0, parent#1,
    // child0#0, child0#1, child1#0, child1#1. Neighbors of tree vertices are
    // subdivision vertices, which are never split.
    std::vector<Incidence> doubled_tree_ends(const Word& w) const {
        std::vector<Incidence> ends;
        for (int j = 0; j < 2 && !w.empty(); ++j) ends.push_back({"b" + std::to_string(j) + ":" + w, "S" + w, false});
        for (char b : children(w))
            for (int j = 0; j < 2; ++j) ends.push_back({"a" + std::to_string(j) + ":" + w + b, "S" + w + b, false});
        return ends;
    }

    // Position of the end of edge a<j>:w at the parent of w.
    std::size_t position_at_parent(const Word& w, std::size_t j) const {
        const auto siblings = children(parent(w));
        const std::size_t index = siblings.size() == 2 && w.back() == '1' ? 1 : 0;
        return 2 + 2 * index + j;
    }

    VertexId vertex_for_end(const Word& w, std::size_t position) const {
        if (!is_split(w)) return "T" + w;
        return ((grouping_.first_half_mask >> position) & 1 ? "A" : "B") + w;
    }

    void subdivision_incidences(const Word& w, const VertexId& v, std::vector<Incidence>& out) const {
        if (mode_ == Mode::Tree || w.empty() || !c_.contains(w)) unknown(v);
        if (mode_ == Mode::Subdivided) {
            out.push_back({"a" + w, "T" + parent(w), false});
            out.push_back({"b" + w, "T" + w, false});
            add_pendant(v, out);
            return;
        }
        for (std::size_t j = 0; j < 2; ++j)
            out.push_back({"a" + std::to_string(j) + ":" + w, vertex_for_end(parent(w), position_at_parent(w, j)), false});
        for (std::size_t j = 0; j < 2; ++j)
            out.push_back({"b" + std::to_string(j) + ":" + w, vertex_for_end(w, j), false});
        add_loops(v, (k_ - 4) / 2, out);
    }

    void tree_incidences(const Word& w, const VertexId& v, std::vector<Incidence>& out) const {
        if (!c_.contains(w) || is_split(w)) unknown(v);
        const std::size_t d = tree_degree(w);
        switch (mode_) {
            case Mode::Tree:
                if (!w.empty()) out.push_back({"e" + w, "T" + parent(w), false});
                for (char b : children(w)) out.push_back({"e" + w + b, "T" + w + b, false});
                break;
            case Mode::Subdivided:
                if (!w.empty()) out.push_back({"b" + w, "S" + w, false});
                for (char b : children(w)) out.push_back({"a" + w + b, "S" + w + b, false});
                if (d == 3) add_loops(v, (k_ - 3) / 2, out);
                if (d == 2) add_pendant(v, out);
                if (d == 1) add_loops(v, (k_ - 1) / 2, out);
                break;
            case Mode::Doubled:
            case Mode::Four:
                out = doubled_tree_ends(w);
                add_loops(v, (k_ - 2 * d) / 2, out);
                break;
        }
    }

    void split_incidences(const Word& w, bool first, const VertexId& v, std::vector<Incidence>& out) const {
        if (!c_.contains(w) || !is_split(w)) unknown(v);
        const auto ends = doubled_tree_ends(w);
        for (std::size_t pos = 0; pos < ends.size(); ++pos) {
            const bool in_first = (grouping_.first_half_mask >> pos) & 1;
            if (in_first == first) out.push_back(ends[pos]);
        }
        out.push_back({"x:" + w, (first ? "B" : "A") + w, false});
    }

    ClosedSetSpec c_;
    std::size_t k_;
    Mode mode_;
    EdgeEndGrouping grouping_;
    std::optional<StandardGraphDescriptor> descriptor_;
};

Mode mode_for(std::size_t k) {
    if (k % 2 == 1) return Mode::Subdivided;
    return k == 4 ? Mode::Four : Mode::Doubled;
}

}  // namespace

OraclePtr gamma_star(const ClosedSetSpec& c) { return std::make_shared<GammaOracle>(c, 0, Mode::Tree, EdgeEndGrouping{}); }

OraclePtr gamma_3(const ClosedSetSpec& c) {
    require_valid(c);
    if (c.is_singleton()) return builtins::loch_ness();
    return std::make_shared<GammaOracle>(c, 3, Mode::Subdivided, EdgeEndGrouping{});
}

OraclePtr gamma_k(const ClosedSetSpec& c, std::size_t k, EdgeEndGrouping grouping) {
    if (k < 4) throw DomainError("gamma_k needs k >= 4 (use gamma_3 for k = 3)");
    if (k > 64) throw DomainError("gamma_k supports k <= 64");
    return std::make_shared<GammaOracle>(c, k, mode_for(k), grouping);
}

std::string ConstructionTrace::to_string() const {
    static constexpr std::array<const char*, 6> branches{"tree", "three", "odd", "even", "four", "loch_ness"};
    static constexpr std::array<const char*, 6> roles{"tree", "subdivision", "pendant", "split_a", "split_b", "builtin"};
    std::string out = std::string(branches[static_cast<std::size_t>(branch)]) + " " +
                      roles[static_cast<std::size_t>(role)] + " word=" + show_word(word);
    if (!host.empty()) out += " host=" + host;
    return out;
}

ConstructionTrace decode_vertex(const ClosedSetSpec& c, std::size_t k, const VertexId& v, EdgeEndGrouping grouping) {
    if (k == 0) return GammaOracle(c, 0, Mode::Tree, grouping).decode(v);
    if (k == 3 && c.is_singleton()) {
        builtins::loch_ness()->incident(v);
        ConstructionTrace t;
        t.branch = ConstructionTrace::Branch::LochNess;
        t.role = ConstructionTrace::Role::Builtin;
        return t;
    }
    if (k < 3 || k > 64) throw DomainError("no gamma construction for k = " + std::to_string(k));
    return GammaOracle(c, k, mode_for(k), grouping).decode(v);
}

}  // namespace endgraph
