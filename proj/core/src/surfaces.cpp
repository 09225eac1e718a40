#include "endgraph/surfaces.hpp"

#include <map>
#include <set>
#include <sstream>

#include "endgraph/errors.hpp"
#include "endgraph/phe.hpp"
#include "text_util.hpp"

namespace endgraph {

std::string to_string(const CircleRef& c) { return c.pants + "." + std::to_string(c.circle); }

namespace {

EdgeId glue_edge(const CircleRef& a, const CircleRef& b) {
    return a < b ? to_string(a) + "~" + to_string(b) : to_string(b) + "~" + to_string(a);
}

FiniteMultigraph build_graph(const PantsComplex& p) {
    FiniteMultigraph g("pants");
    for (const auto& q : p.pants) g.add_vertex(q.id);
    for (const auto& [a, b] : p.glue) g.add_edge(glue_edge(a, b), a.pants, b.pants);
    g.set_root(p.base);
    return g;
}

CircleRef parse_circle(const detail::Line& line, std::size_t index) {
    const auto& text = line.tokens[index].text;
    const auto dot = text.rfind('.');
    if (dot == std::string::npos || dot == 0) line.fail(index, "expected <pants>.<circle>");
    const auto circle = detail::parse_unsigned(line, index, std::string_view(text).substr(dot + 1));
    if (circle == 0 || circle > UINT32_MAX) line.fail(index, "circle index must be at least 1");
    return {text.substr(0, dot), static_cast<std::uint32_t>(circle)};
}

class AnnulusChain final : public PantsOracle {
public:
    std::string base() const override { return "D"; }

    std::uint32_t legs(const std::string& pants) const override {
        if (pants == "D") return 0;
        index(pants);
        return 1;
    }

    CircleRef partner(const CircleRef& c) const override {
        if (c.pants == "D") {
            if (c.circle != 1) bad_circle(c);
            return {"A1", 1};
        }
        const auto i = index(c.pants);
        if (c.circle == 1) return i == 1 ? CircleRef{"D", 1} : CircleRef{"A" + std::to_string(i - 1), 2};
        if (c.circle == 2) return {"A" + std::to_string(i + 1), 1};
        bad_circle(c);
    }

    std::optional<SurfaceClass> surface_class() const override { return SurfaceClass{Rank(0), FinitePair{1, 0}}; }
    std::string provenance() const override { return "pants:annulus_chain"; }

private:
    [[noreturn]] static void bad_circle(const CircleRef& c) { throw DomainError("unknown circle " + to_string(c)); }

    static std::uint64_t index(const std::string& pants) {
        const bool digits = pants.size() > 1 && pants[0] == 'A' && pants[1] != '0' &&
                            pants.find_first_not_of("0123456789", 1) == std::string::npos && pants.size() < 19;
        if (!digits) throw DomainError("unknown pants '" + pants + "'");
        return std::stoull(pants.substr(1));
    }
};

class PantsGraph final : public GraphOracle {
public:
    explicit PantsGraph(PantsOraclePtr p) : p_(std::move(p)) {}

    VertexId root() const override { return p_->base(); }

    std::vector<Incidence> incident(const VertexId& v) const override {
        std::vector<Incidence> out;
        const auto legs = p_->legs(v);
        for (std::uint32_t i = 1; i <= legs + 1; ++i) {
            const CircleRef here{v, i};
            const CircleRef there = p_->partner(here);
            if (there.pants == v && there.circle < i) continue;  // loop already listed
            out.push_back({glue_edge(here, there), there.pants, there.pants == v});
        }
        return out;
    }

    std::optional<StandardGraphDescriptor> descriptor() const override {
        const auto s = p_->surface_class();
        if (!s) return std::nullopt;
        return as_graph_descriptor(*s);
    }

    std::string provenance() const override { return p_->provenance(); }

private:
    PantsOraclePtr p_;
};

}  // namespace

std::string validation_error(const PantsComplex& p) {
    if (p.pants.empty()) return "pants complex is empty";
    std::map<std::string, std::uint32_t> legs;
    for (const auto& q : p.pants)
        if (!legs.emplace(q.id, q.legs).second) return "duplicate pants " + q.id;
    if (!legs.count(p.base)) return "base pants '" + p.base + "' does not exist";
    std::set<CircleRef> used;
    for (const auto& [a, b] : p.glue) {
        for (const auto& c : {a, b}) {
            const auto it = legs.find(c.pants);
            if (it == legs.end()) return "glue refers to unknown pants " + c.pants;
            if (c.circle < 1 || c.circle > it->second + 1)
                return "pants " + c.pants + " has no circle " + std::to_string(c.circle);
        }
        if (a == b) return "circle " + to_string(a) + " is glued to itself";
        for (const auto& c : {a, b})
            if (!used.insert(c).second) return "circle " + to_string(c) + " is glued twice";
    }
    for (const auto& q : p.pants)
        for (std::uint32_t i = 1; i <= q.legs + 1; ++i)
            if (!used.count({q.id, i})) return "circle " + to_string(CircleRef{q.id, i}) + " is unmatched";
    if (!is_connected(build_graph(p))) return "glued surface is disconnected";
    return {};
}

void validate(const PantsComplex& p) {
    if (auto err = validation_error(p); !err.empty()) throw DomainError("invalid pants complex: " + err);
}

PantsComplex parse_pants(std::string_view text) {
    PantsComplex p;
    bool have_base = false;
    for (const auto& line : detail::tokenize(text)) {
        const auto& tok = line.tokens;
        const auto& head = tok[0].text;
        if (head == "pants") {
            if (tok.size() != 3) line.fail(std::min<std::size_t>(tok.size(), 3), "expected: pants <id> legs=<d>");
            const auto [key, value] = detail::key_value(line, 2);
            if (key != "legs") line.fail(2, "expected legs=<d>");
            const auto legs = detail::parse_unsigned(line, 2, value);
            if (legs > 1'000'000) line.fail(2, "too many legs");
            p.pants.push_back({tok[1].text, static_cast<std::uint32_t>(legs)});
        } else if (head == "glue") {
            if (tok.size() != 3) line.fail(std::min<std::size_t>(tok.size(), 3), "expected: glue <id>.<i> <id>.<i>");
            p.glue.emplace_back(parse_circle(line, 1), parse_circle(line, 2));
        } else if (head == "base") {
            if (tok.size() != 2) line.fail(std::min<std::size_t>(tok.size(), 2), "expected: base <id>");
            if (have_base) line.fail(0, "base given twice");
            p.base = tok[1].text;
            have_base = true;
        } else {
            line.fail(0, "expected pants, glue or base");
        }
    }
    if (!have_base) throw ParseError(1, 1, "missing base line");
    validate(p);
    return p;
}

std::string to_text(const PantsComplex& p) {
    std::ostringstream out;
    for (const auto& q : p.pants) out << "pants " << q.id << " legs=" << q.legs << "\n";
    for (const auto& [a, b] : p.glue) out << "glue " << to_string(a) << " " << to_string(b) << "\n";
    out << "base " << p.base << "\n";
    return out.str();
}

StandardGraphDescriptor as_graph_descriptor(const SurfaceClass& s) {
    StandardGraphDescriptor d{s.genus, s.endpair};
    validate(d);
    return d;
}

PantsOraclePtr annulus_chain() { return std::make_shared<AnnulusChain>(); }

FiniteMultigraph to_graph(const PantsComplex& p) {
    validate(p);
    return build_graph(p);
}

OraclePtr to_graph(const PantsOraclePtr& p) { return std::make_shared<PantsGraph>(p); }

std::int64_t euler_characteristic(const PantsComplex& p) {
    validate(p);
    std::int64_t chi = 0;
    for (const auto& q : p.pants) chi += 1 - static_cast<std::int64_t>(q.legs);
    return chi;
}

std::int64_t genus(const PantsComplex& p) {
    const std::int64_t g = rank(to_graph(p));
    const std::int64_t chi = euler_characteristic(p);
    if (2 * g != 2 - chi) throw DomainError("genus mismatch: rank " + std::to_string(g) + " but chi " + std::to_string(chi));
    return g;
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Yes:
            return "yes";
        case Verdict::No:
            return "no";
        case Verdict::Unknown:
            break;
    }
    return "unknown";
}

Verdict surfaces_homeomorphic(const SurfaceInput& a, const SurfaceInput& b) {
    const auto* pa = std::get_if<PantsComplex>(&a);
    const auto* pb = std::get_if<PantsComplex>(&b);
    if (pa) validate(*pa);
    if (pb) validate(*pb);
    if (pa && pb) return genus(*pa) == genus(*pb) ? Verdict::Yes : Verdict::No;
    if (pa || pb) return Verdict::No;
    auto known = [](const SurfaceInput& s) -> std::optional<SurfaceClass> {
        if (const auto* c = std::get_if<SurfaceClass>(&s)) return *c;
        return std::get<PantsOraclePtr>(s)->surface_class();
    };
    const auto ca = known(a);
    const auto cb = known(b);
    if (!ca || !cb) return Verdict::Unknown;
    return phe_equivalent(as_graph_descriptor(*ca), as_graph_descriptor(*cb)) ? Verdict::Yes : Verdict::No;
}

}  // namespace endgraph
