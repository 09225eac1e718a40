#include "endgraph/spec_file.hpp"

#include "endgraph/builtins.hpp"
#include "endgraph/errors.hpp"
#include "endgraph/graph_io.hpp"
#include "endgraph/phe.hpp"
#include "endgraph/reductions.hpp"
#include "text_util.hpp"

namespace endgraph {

namespace {

const detail::Line& single_line(const std::vector<detail::Line>& lines, const std::string& what) {
    if (lines.empty()) throw ParseError(1, 1, "empty " + what + " text");
    if (lines.size() > 1) lines[1].fail(0, "unexpected extra line after " + what);
    return lines.front();
}

StandardGraphDescriptor descriptor_from(const detail::Line& line, std::size_t first) {
    std::optional<Rank> rank;
    std::optional<std::uint64_t> ends;
    std::optional<std::uint64_t> loop_ends;
    std::optional<EndPairDescriptor> endpair;
    std::size_t endpair_token = first;
    for (std::size_t i = first; i < line.tokens.size(); ++i) {
        const auto [key, value] = detail::key_value(line, i);
        auto once = [&](bool seen) {
            if (seen) line.fail(i, "duplicate key '" + key + "'");
        };
        if (key == "rank") {
            once(rank.has_value());
            rank = value == "inf" ? Rank::infinite() : Rank(detail::parse_unsigned(line, i, value));
        } else if (key == "ends") {
            once(ends.has_value());
            ends = detail::parse_unsigned(line, i, value);
        } else if (key == "loopends") {
            once(loop_ends.has_value());
            loop_ends = detail::parse_unsigned(line, i, value);
        } else if (key == "endpair") {
            once(endpair.has_value());
            endpair_token = i;
            if (value == "omega+1:0")
                endpair = ConvergentSequence{false};
            else if (value == "omega+1:1")
                endpair = ConvergentSequence{true};
            else if (value == "cantor:empty")
                endpair = CantorPair{CantorLoopPart::Empty};
            else if (value == "cantor:all")
                endpair = CantorPair{CantorLoopPart::All};
            else if (value == "cantor:clopen")
                endpair = CantorPair{CantorLoopPart::ProperClopen};
            else
                line.fail(i, "unknown endpair '" + value + "'");
        } else {
            line.fail(i, "unknown key '" + key + "'");
        }
    }
    if (!rank) line.fail(line.tokens.size(), "missing rank=");
    if (endpair && (ends || loop_ends)) line.fail(endpair_token, "endpair= excludes ends= and loopends=");
    if (!endpair) {
        if (!ends || !loop_ends) line.fail(line.tokens.size(), "expected ends= and loopends=, or endpair=");
        if (*ends > UINT32_MAX || *loop_ends > UINT32_MAX) line.fail(first, "end count too large");
        endpair = FinitePair{static_cast<std::uint32_t>(*ends), static_cast<std::uint32_t>(*loop_ends)};
    }
    StandardGraphDescriptor d{*rank, *endpair};
    if (auto err = validation_error(d); !err.empty()) line.fail(first, "invalid descriptor: " + err);
    return d;
}

GammaSpec gamma_from(const detail::Line& line) {
    if (line.tokens.size() < 3) line.fail(line.tokens.size(), "expected: gamma <k> closedset ...");
    const auto k = detail::parse_unsigned(line, 1, line.tokens[1].text);
    if (!(k == 0 || (k >= 3 && k <= 64))) line.fail(1, "k must be 0 or between 3 and 64");
    std::string rest;
    std::vector<std::size_t> starts;
    for (std::size_t i = 2; i < line.tokens.size(); ++i) {
        if (!rest.empty()) rest += ' ';
        starts.push_back(rest.size() + 1);
        rest += line.tokens[i].text;
    }
    try {
        return {static_cast<std::size_t>(k), parse_closed_set(rest)};
    } catch (const ParseError& e) {
        std::size_t t = 0;
        while (t + 1 < starts.size() && starts[t + 1] <= e.column()) ++t;
        throw ParseError(line.number, line.tokens[t + 2].column + (e.column() - starts[t]), e.message());
    }
}

}  // namespace

StandardGraphDescriptor parse_descriptor(std::string_view text) {
    const auto lines = detail::tokenize(text);
    const auto& line = single_line(lines, "descriptor");
    return descriptor_from(line, line.tokens[0].text == "descriptor" ? 1 : 0);
}

SpecFile parse_spec(std::string_view text) {
    const auto lines = detail::tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "empty spec text");
    const auto& head = lines.front().tokens[0].text;
    if (head == "graph") return parse_graph(text);
    if (head == "closedset") return parse_closed_set(text);
    if (head == "descriptor" || head.starts_with("rank=")) return parse_descriptor(text);
    if (head == "pants" || head == "glue" || head == "base") return parse_pants(text);
    if (head == "builtin") {
        const auto& line = single_line(lines, "builtin");
        if (line.tokens.size() != 2) line.fail(std::min<std::size_t>(line.tokens.size(), 2), "expected: builtin <name>");
        try {
            builtins::by_name(line.tokens[1].text);
        } catch (const DomainError& e) {
            line.fail(1, e.what());
        }
        return BuiltinSpec{line.tokens[1].text};
    }
    if (head == "gamma") return gamma_from(single_line(lines, "gamma"));
    lines.front().fail(0, "unknown spec keyword '" + head + "'");
}

std::string print_spec(const SpecFile& s) {
    struct Printer {
        std::string operator()(const FiniteMultigraph& g) const { return to_text(g); }
        std::string operator()(const BuiltinSpec& b) const { return "builtin " + b.name + "\n"; }
        std::string operator()(const GammaSpec& g) const {
            return "gamma " + std::to_string(g.k) + " " + to_string(g.closed_set) + "\n";
        }
        std::string operator()(const ClosedSetSpec& c) const { return to_string(c) + "\n"; }
        std::string operator()(const StandardGraphDescriptor& d) const { return to_string(d) + "\n"; }
        std::string operator()(const PantsComplex& p) const { return to_text(p); }
    };
    return std::visit(Printer{}, s);
}

OraclePtr gamma_oracle(std::size_t k, const ClosedSetSpec& c) {
    if (k == 0) return gamma_star(c);
    if (k == 3) return gamma_3(c);
    return gamma_k(c, k);
}

OraclePtr to_oracle(const SpecFile& s) {
    struct Resolver {
        OraclePtr operator()(const FiniteMultigraph& g) const {
            if (!g.root()) throw DomainError("graph '" + g.name() + "' has no root");
            return make_oracle(root_component(g));
        }
        OraclePtr operator()(const BuiltinSpec& b) const { return builtins::by_name(b.name); }
        OraclePtr operator()(const GammaSpec& g) const { return gamma_oracle(g.k, g.closed_set); }
        OraclePtr operator()(const ClosedSetSpec&) const {
            throw DomainError("a closed set is not a graph; wrap it as 'gamma <k> closedset ...'");
        }
        OraclePtr operator()(const StandardGraphDescriptor& d) const { return realize(d, {SpaceTag::Kind::Any, 0}); }
        OraclePtr operator()(const PantsComplex& p) const { return make_oracle(to_graph(p)); }
    };
    return std::visit(Resolver{}, s);
}

}  // namespace endgraph
