#include "endgraph/phe.hpp"

#include <algorithm>
#include <charconv>
#include <set>

#include "endgraph/builtins.hpp"
#include "endgraph/ends.hpp"
#include "endgraph/errors.hpp"
#include "endgraph/reductions.hpp"

namespace endgraph {

bool phe_equivalent(const StandardGraphDescriptor& a, const StandardGraphDescriptor& b) {
    validate(a);
    validate(b);
    if (a.rank != b.rank) return false;
    if (a.endpair.index() != b.endpair.index()) return false;
    return a.endpair == b.endpair;
}

std::string SpaceTag::to_string() const {
    switch (kind) {
        case Kind::Regular:
            return std::to_string(k);
        case Kind::AtMost:
            return "<=" + std::to_string(k);
        case Kind::Any:
            break;
    }
    return "<inf";
}

SpaceTag parse_space(std::string_view text) {
    if (text == "<inf") return {SpaceTag::Kind::Any, 0};
    SpaceTag tag{SpaceTag::Kind::Regular, 0};
    if (text.substr(0, 2) == "<=") {
        tag.kind = SpaceTag::Kind::AtMost;
        text.remove_prefix(2);
    }
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), tag.k);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size() || tag.k > 64)
        throw DomainError("invalid space '" + std::string(text) + "': expected k, <=k or <inf");
    return tag;
}

namespace {

// Parses "<letter><a>" or "<letter><a>_<b>" into indices.
bool parse_indices(std::string_view id, char letter, std::size_t& a, std::size_t* b) {
    if (id.size() < 2 || id[0] != letter) return false;
    id.remove_prefix(1);
    const auto underscore = id.find('_');
    if ((underscore == std::string_view::npos) != (b == nullptr)) return false;
    auto number = [](std::string_view s, std::size_t& out) {
        if (s.empty() || (s.size() > 1 && s[0] == '0')) return false;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
        return ec == std::errc() && ptr == s.data() + s.size();
    };
    if (!b) return number(id, a);
    return number(id.substr(0, underscore), a) && number(id.substr(underscore + 1), *b);
}

std::string idx(std::size_t i) { return std::to_string(i); }
std::string idx(std::size_t i, std::size_t j) { return std::to_string(i) + "_" + std::to_string(j); }

[[noreturn]] void unknown(const VertexId& v) { throw DomainError("unknown vertex '" + v + "'"); }

// Hub path h0 .. h(n-1), each hub carrying a tail ray t<i>_1, t<i>_2, ...
// Tails i < loop_tails get a lollipop on every vertex; tail 0 additionally
// gets lollipops on its first `extra` vertices. Maximum degree 3.
class CombOracle final : public GraphOracle {
public:
    CombOracle(std::size_t tails, std::size_t loop_tails, std::size_t extra, StandardGraphDescriptor d)
        : tails_(tails), loop_tails_(loop_tails), extra_(extra), d_(std::move(d)) {}

    VertexId root() const override { return "h0"; }

    std::vector<Incidence> incident(const VertexId& v) const override {
        std::size_t i = 0;
        std::size_t j = 0;
        std::vector<Incidence> out;
        if (parse_indices(v, 'h', i, nullptr) && i < tails_) {
            if (i > 0) out.push_back({"H" + idx(i), "h" + idx(i - 1), false});
            if (i + 1 < tails_) out.push_back({"H" + idx(i + 1), "h" + idx(i + 1), false});
            out.push_back({"E" + idx(i, 1), "t" + idx(i, 1), false});
        } else if (parse_indices(v, 't', i, &j) && i < tails_ && j >= 1) {
            out.push_back({"E" + idx(i, j), j == 1 ? "h" + idx(i) : "t" + idx(i, j - 1), false});
            out.push_back({"E" + idx(i, j + 1), "t" + idx(i, j + 1), false});
            if (has_lollipop(i, j)) out.push_back({"c" + idx(i, j), "p" + idx(i, j), false});
        } else if (parse_indices(v, 'p', i, &j) && i < tails_ && j >= 1 && has_lollipop(i, j)) {
            out.push_back({"c" + idx(i, j), "t" + idx(i, j), false});
            out.push_back({"o" + idx(i, j), v, true});
        } else {
            unknown(v);
        }
        return out;
    }

    std::optional<StandardGraphDescriptor> descriptor() const override { return d_; }
    std::string provenance() const override { return "realize:comb:" + to_string(d_); }

private:
    bool has_lollipop(std::size_t i, std::size_t j) const { return i < loop_tails_ || (i == 0 && j <= extra_); }

    std::size_t tails_;
    std::size_t loop_tails_;
    std::size_t extra_;
    StandardGraphDescriptor d_;
};

// Spine x0 x1 x2 ... with side rays z<i>_1, z<i>_2, ... converging to the
// spine's end. With loops: even spine vertices carry lollipops and odd ones
// carry side rays. Without: every x_i (i >= 1) carries a side ray and the
// first `extra` vertices of side ray 1 carry lollipops. Maximum degree 3.
class SpineOracle final : public GraphOracle {
public:
    SpineOracle(bool loops, std::size_t extra, StandardGraphDescriptor d) : loops_(loops), extra_(extra), d_(std::move(d)) {}

    VertexId root() const override { return "x0"; }

    std::vector<Incidence> incident(const VertexId& v) const override {
        std::size_t i = 0;
        std::size_t j = 0;
        std::vector<Incidence> out;
        if (parse_indices(v, 'x', i, nullptr)) {
            if (i > 0) out.push_back({"X" + idx(i), "x" + idx(i - 1), false});
            out.push_back({"X" + idx(i + 1), "x" + idx(i + 1), false});
            if (has_side(i)) out.push_back({"Z" + idx(i, 1), "z" + idx(i, 1), false});
            if (loops_ && i % 2 == 0) out.push_back({"c" + idx(i), "p" + idx(i), false});
        } else if (parse_indices(v, 'z', i, &j) && has_side(i) && j >= 1) {
            out.push_back({"Z" + idx(i, j), j == 1 ? "x" + idx(i) : "z" + idx(i, j - 1), false});
            out.push_back({"Z" + idx(i, j + 1), "z" + idx(i, j + 1), false});
            if (side_lollipop(i, j)) out.push_back({"c" + idx(i, j), "p" + idx(i, j), false});
        } else if (parse_indices(v, 'p', i, nullptr) && loops_ && i % 2 == 0) {
            out.push_back({"c" + idx(i), "x" + idx(i), false});
            out.push_back({"o" + idx(i), v, true});
        } else if (parse_indices(v, 'p', i, &j) && has_side(i) && j >= 1 && side_lollipop(i, j)) {
            out.push_back({"c" + idx(i, j), "z" + idx(i, j), false});
            out.push_back({"o" + idx(i, j), v, true});
        } else {
            unknown(v);
        }
        return out;
    }

    std::optional<StandardGraphDescriptor> descriptor() const override { return d_; }
    std::string provenance() const override { return "realize:spine:" + to_string(d_); }

private:
    bool has_side(std::size_t i) const { return loops_ ? i % 2 == 1 : i >= 1; }
    bool side_lollipop(std::size_t i, std::size_t j) const { return !loops_ && i == 1 && j <= extra_; }

    bool loops_;
    std::size_t extra_;
    StandardGraphDescriptor d_;
};

// Forwards everything but the descriptor.
class Described final : public GraphOracle {
public:
    Described(OraclePtr base, StandardGraphDescriptor d) : base_(std::move(base)), d_(std::move(d)) {}
    VertexId root() const override { return base_->root(); }
    std::vector<Incidence> incident(const VertexId& v) const override { return base_->incident(v); }
    std::optional<StandardGraphDescriptor> descriptor() const override { return d_; }
    std::string provenance() const override { return base_->provenance(); }
    int patch_depth() const override { return base_->patch_depth(); }

private:
    OraclePtr base_;
    StandardGraphDescriptor d_;
};

// Subdivides r edges along a descending path of a tree and hangs a lollipop
// on each new vertex; degrees stay as they were.
OraclePtr add_tree_lollipops(OraclePtr g, std::uint64_t r) {
    VertexId previous;
    VertexId current = g->root();
    for (std::uint64_t i = 0; i < r; ++i) {
        const auto incident = g->incident(current);
        const auto it = std::find_if(incident.begin(), incident.end(),
                                     [&](const Incidence& inc) { return !inc.self_loop && inc.other != previous; });
        if (it == incident.end()) throw DomainError("tree has no edge to subdivide below " + current);
        const Incidence step = *it;
        g = subdivide_edge(g, current, step.edge);
        const VertexId mid = patch_id(g->patch_depth(), "s");
        g = attach_lollipop(g, mid);
        previous = mid;
        current = step.other;
    }
    return g;
}

ClosedSetSpec ray_points(std::uint32_t n) {
    // {1^i 0^omega : i < n}: states 0..n-1 walk the 1-chain, state n is the 0-tail.
    closed::Automaton a;
    a.states = n + 1;
    a.next.assign(a.states, {closed::Automaton::kNone, closed::Automaton::kNone});
    a.accepting.assign(a.states, true);
    for (std::uint32_t i = 0; i < n; ++i) {
        a.next[i][0] = static_cast<int>(n);
        if (i + 1 < n) a.next[i][1] = static_cast<int>(i + 1);
    }
    a.next[n][0] = static_cast<int>(n);
    return ClosedSetSpec(a);
}

[[noreturn]] void unrealizable(const StandardGraphDescriptor& d, SpaceTag s, const std::string& why) {
    throw DomainError("unrealizable: " + to_string(d) + " in space " + s.to_string() + ": " + why);
}
[[noreturn]] void unsupported(const StandardGraphDescriptor& d, SpaceTag s, const std::string& why) {
    throw DomainError("unsupported: " + to_string(d) + " in space " + s.to_string() + ": " + why);
}

OraclePtr loop_gamma(const ClosedSetSpec& c, std::size_t k) { return k == 3 ? gamma_3(c) : gamma_k(c, k); }

}  // namespace

OraclePtr realize(const StandardGraphDescriptor& d, SpaceTag space) {
    validate(d);
    const bool regular = space.kind == SpaceTag::Kind::Regular;
    const std::size_t cap = space.kind == SpaceTag::Kind::Any ? SIZE_MAX : space.k;
    if (cap < 2) unrealizable(d, space, "an infinite connected graph needs vertices of degree 2");
    const auto extra = d.rank.is_infinite() ? std::uint64_t{0} : d.rank.value();
    OraclePtr g;

    if (regular && space.k == 2) {
        const bool line = d == StandardGraphDescriptor{Rank(0), FinitePair{2, 0}};
        if (!line) unrealizable(d, space, "the only infinite connected 2-regular graph is the line");
        return builtins::regular_tree(2);
    }

    if (const auto* p = std::get_if<FinitePair>(&d.endpair)) {
        if (regular) {
            if (p->loop_ends != p->ends)
                unrealizable(d, space,
                             "an isolated end not accumulated by loops is eventually a ray, whose degree-2 "
                             "vertices cannot occur in a k-regular graph with k >= 3");
            g = space.k == 3 && p->ends == 1 ? builtins::loch_ness() : loop_gamma(ray_points(p->ends), space.k);
        } else {
            if (cap < 3 && (p->loop_ends > 0 || extra > 0))
                unrealizable(d, space, "cycles off a ray need a vertex of degree 3");
            if (cap < 3 && p->ends > 2) unrealizable(d, space, "more than two ends need a vertex of degree 3");
            return std::make_shared<CombOracle>(p->ends, p->loop_ends, extra, d);
        }
    } else if (const auto* s = std::get_if<ConvergentSequence>(&d.endpair)) {
        if (regular)
            unrealizable(d, space,
                         "the isolated ends 1/n are not accumulated by loops, which forces rays of degree-2 "
                         "vertices");
        if (cap < 3) unrealizable(d, space, "infinitely many ends need vertices of degree 3");
        return std::make_shared<SpineOracle>(s->limit_in_loops, extra, d);
    } else {
        const auto part = std::get<CantorPair>(d.endpair).loop_part;
        if (cap < 3) unrealizable(d, space, "a Cantor set of ends needs vertices of degree 3");
        switch (part) {
            case CantorLoopPart::All:
                g = loop_gamma(ClosedSetSpec::full(), regular ? space.k : 3);
                break;
            case CantorLoopPart::Empty:
                if (regular && extra > 0 && space.k != 3)
                    unsupported(d, space, "finite positive rank with Cantor ends is built for k = 3 only");
                g = add_tree_lollipops(builtins::regular_tree(regular ? space.k : 3), extra);
                break;
            case CantorLoopPart::ProperClopen:
                if (regular || cap < 5) unsupported(d, space, "the clopen-split Cantor model has degree 5 and is not regular");
                g = builtins::fig4_cantor();
                break;
        }
    }
    return std::make_shared<Described>(g, d);
}

PheVerdict phe_distinguish(const GraphOracle& g1, const GraphOracle& g2, std::int64_t budget) {
    const auto d1 = g1.descriptor();
    const auto d2 = g2.descriptor();
    if (d1 && d2) {
        if (!phe_equivalent(*d1, *d2)) return {true, "descriptors differ: " + to_string(*d1) + " vs " + to_string(*d2)};
        return {};
    }
    auto exceeds = [&](const std::optional<StandardGraphDescriptor>& d, const GraphOracle& other,
                       const std::string& name) -> PheVerdict {
        if (!d || d->rank.is_infinite()) return {};
        const auto lb = rank_lower_bound(other, budget);
        if (lb <= static_cast<std::int64_t>(d->rank.value())) return {};
        return {true, name + " has rank >= " + std::to_string(lb) + " within radius " + std::to_string(budget) +
                          ", the other is certified rank " + d->rank.to_string()};
    };
    if (auto v = exceeds(d1, g2, "second graph"); v.distinguished) return v;
    if (auto v = exceeds(d2, g1, "first graph"); v.distinguished) return v;
    return {};
}

namespace {

bool word_less(const Word& a, const Word& b) { return a.size() != b.size() ? a.size() < b.size() : a < b; }

bool set_less(const std::vector<Word>& a, const std::vector<Word>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), word_less);
}

// All word sets of total size exactly `weight`, appended in order.
void sets_of_weight(std::size_t weight, std::vector<ClopenDescription>& out) {
    std::vector<Word> words;
    for (std::size_t len = 0; len + 1 <= weight; ++len)
        for (std::size_t bits = 0; bits < (std::size_t{1} << len); ++bits) {
            Word w(len, '0');
            for (std::size_t i = 0; i < len; ++i)
                if ((bits >> (len - 1 - i)) & 1) w[i] = '1';
            words.push_back(std::move(w));
        }
    std::vector<std::vector<Word>> found;
    std::vector<Word> current;
    auto recurse = [&](auto&& self, std::size_t from, std::size_t left) -> void {
        if (left == 0) {
            found.push_back(current);
            return;
        }
        for (std::size_t i = from; i < words.size(); ++i) {
            if (words[i].size() + 1 > left) break;
            current.push_back(words[i]);
            self(self, i + 1, left - words[i].size() - 1);
            current.pop_back();
        }
    };
    recurse(recurse, 0, weight);
    std::sort(found.begin(), found.end(), set_less);
    for (auto& f : found) out.push_back({std::move(f)});
}

std::vector<ClopenDescription> first_descriptions(std::size_t count) {
    std::vector<ClopenDescription> out;
    for (std::size_t weight = 0; out.size() < count; ++weight) {
        if (weight > 24) throw DomainError("clopen enumeration index too large");
        sets_of_weight(weight, out);
    }
    out.resize(count);
    return out;
}

std::vector<Word> level_words(const ClosedSetSpec& c, std::size_t depth) {
    std::vector<Word> level;
    if (c.contains("")) level.push_back({});
    for (std::size_t d = 0; d < depth; ++d) {
        std::vector<Word> next;
        for (const auto& w : level)
            for (char b : {'0', '1'})
                if (c.contains(w + b)) next.push_back(w + b);
        level = std::move(next);
    }
    return level;
}

std::vector<Word> trace_of(const std::vector<Word>& level, const ClopenDescription& o) {
    std::vector<Word> out;
    for (const auto& w : level)
        if (std::any_of(o.words.begin(), o.words.end(), [&](const Word& p) { return w.compare(0, p.size(), p) == 0 && p.size() <= w.size(); }))
            out.push_back(w);
    return out;
}

}  // namespace

std::string ClopenDescription::to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < words.size(); ++i) out += (i ? "," : "") + show_word(words[i]);
    return out + "}";
}

ClopenDescription clopen_description(std::size_t i) { return first_descriptions(i + 1).back(); }

ClopenDescription doubled_clopen_description(std::size_t i) { return clopen_description(i / 2); }

std::vector<Word> clopen_trace(const ClosedSetSpec& c, const ClopenDescription& o, std::size_t depth) {
    return trace_of(level_words(c, depth), o);
}

std::vector<Word> clopen_enumeration(const ClosedSetSpec& c, std::size_t i, std::size_t depth) {
    return clopen_trace(c, doubled_clopen_description(i), depth);
}

Deduplication dedup_enumeration(const ClosedSetSpec& ends, const ClosedSetSpec& loop_ends, std::size_t count,
                                std::size_t depth) {
    Deduplication out;
    if (count == 0) return out;
    const auto descriptions = first_descriptions((count + 1) / 2);
    const auto level = level_words(ends, depth);
    const auto loop_level = level_words(loop_ends, depth);
    std::set<std::vector<Word>> seen;
    std::set<std::vector<Word>> seen_loop;
    for (std::size_t i = 0; i < count; ++i) {
        const auto& o = descriptions[i / 2];
        if (seen.insert(trace_of(level, o)).second) out.rho.push_back(i);
        if (seen_loop.insert(trace_of(loop_level, o)).second) out.rho_loop.push_back(i);
    }
    return out;
}

}  // namespace endgraph
