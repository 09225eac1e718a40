#include "endgraph/builtins.hpp"

#include "endgraph/errors.hpp"

namespace endgraph::builtins {

namespace {

// Parses the decimal suffix of `id` after `prefix`; nullopt when malformed.
std::optional<std::size_t> index_after(const std::string& id, std::size_t prefix) {
    if (id.size() <= prefix || id.size() > prefix + 12) return std::nullopt;
    if (id[prefix] == '0' && id.size() > prefix + 1) return std::nullopt;
    std::size_t n = 0;
    for (std::size_t i = prefix; i < id.size(); ++i) {
        if (id[i] < '0' || id[i] > '9') return std::nullopt;
        n = n * 10 + static_cast<std::size_t>(id[i] - '0');
    }
    return n;
}

[[noreturn]] void unknown(const std::string& graph, const std::string& v) {
    throw DomainError("unknown vertex '" + v + "' in " + graph);
}

std::string x(std::size_t i) { return "x" + std::to_string(i); }

class Ray final : public GraphOracle {
public:
    VertexId root() const override { return "x0"; }
    std::vector<Incidence> incident(const VertexId& v) const override {
        const auto i = v.starts_with("x") ? index_after(v, 1) : std::nullopt;
        if (!i) unknown("ray", v);
        std::vector<Incidence> out;
        if (*i > 0) out.push_back({"r" + std::to_string(*i - 1), x(*i - 1), false});
        out.push_back({"r" + std::to_string(*i), x(*i + 1), false});
        return out;
    }
    std::optional<StandardGraphDescriptor> descriptor() const override {
        return StandardGraphDescriptor{Rank(0), FinitePair{1, 0}};
    }
    std::string provenance() const override { return "builtin:ray"; }
};

class RegularTree final : public GraphOracle {
public:
    explicit RegularTree(std::size_t k) : k_(k) {
        if (k < 2 || k > 10) throw DomainError("regular tree degree must be in 2..10");
    }
    VertexId root() const override { return "t"; }
    std::vector<Incidence> incident(const VertexId& v) const override {
        if (v.empty() || v[0] != 't') unknown(provenance(), v);
        for (std::size_t i = 1; i < v.size(); ++i) {
            const std::size_t limit = i == 1 ? k_ : k_ - 1;
            if (v[i] < '0' || static_cast<std::size_t>(v[i] - '0') >= limit) unknown(provenance(), v);
        }
        std::vector<Incidence> out;
        if (v.size() > 1) out.push_back({"e" + v.substr(1), v.substr(0, v.size() - 1), false});
        const std::size_t children = v.size() == 1 ? k_ : k_ - 1;
        for (std::size_t c = 0; c < children; ++c) {
            const std::string child = v + static_cast<char>('0' + c);
            out.push_back({"e" + child.substr(1), child, false});
        }
        return out;
    }
    std::optional<StandardGraphDescriptor> descriptor() const override {
        if (k_ == 2) return StandardGraphDescriptor{Rank(0), FinitePair{2, 0}};
        return StandardGraphDescriptor{Rank(0), CantorPair{CantorLoopPart::Empty}};
    }
    std::string provenance() const override { return "builtin:tree" + std::to_string(k_); }

private:
    std::size_t k_;
};

class LochNess final : public GraphOracle {
public:
    VertexId root() const override { return "x0"; }
    std::vector<Incidence> incident(const VertexId& v) const override {
        if (v.starts_with("y")) {
            const auto i = index_after(v, 1);
            if (!i || *i == 0) unknown("loch_ness", v);
            const auto s = std::to_string(*i);
            return {{"p" + s, x(*i), false}, {"q" + s, v, true}};
        }
        const auto i = v.starts_with("x") ? index_after(v, 1) : std::nullopt;
        if (!i) unknown("loch_ness", v);
        std::vector<Incidence> out;
        if (*i > 0) out.push_back({"r" + std::to_string(*i - 1), x(*i - 1), false});
        out.push_back({"r" + std::to_string(*i), x(*i + 1), false});
        if (*i == 0)
            out.push_back({"l0", v, true});
        else
            out.push_back({"p" + std::to_string(*i), "y" + std::to_string(*i), false});
        return out;
    }
    std::optional<StandardGraphDescriptor> descriptor() const override {
        return StandardGraphDescriptor{Rank::infinite(), FinitePair{1, 1}};
    }
    std::string provenance() const override { return "builtin:loch_ness"; }
};

class Fig4First final : public GraphOracle {
public:
    VertexId root() const override { return "x0"; }
    std::vector<Incidence> incident(const VertexId& v) const override {
        const auto i = v.starts_with("x") ? index_after(v, 1) : std::nullopt;
        if (!i) unknown("fig4_first", v);
        std::vector<Incidence> out;
        if (*i > 0) out.push_back({"r" + std::to_string(*i - 1), x(*i - 1), false});
        out.push_back({"r" + std::to_string(*i), x(*i + 1), false});
        if (*i >= 1 && *i <= 3) out.push_back({"l" + std::to_string(*i), v, true});
        return out;
    }
    std::optional<StandardGraphDescriptor> descriptor() const override {
        return StandardGraphDescriptor{Rank(3), FinitePair{1, 0}};
    }
    std::string provenance() const override { return "builtin:fig4_first"; }
};

class Fig4Middle final : public GraphOracle {
public:
    VertexId root() const override { return "x0"; }
    std::vector<Incidence> incident(const VertexId& v) const override {
        if (v.starts_with("z")) {
            // z<i>_<j>: j-th vertex of the side ray hanging from x_i.
            const auto sep = v.find('_');
            if (sep == std::string::npos) unknown("fig4_middle", v);
            const auto i = index_after(v.substr(0, sep), 1);
            const auto j = index_after(v, sep + 1);
            if (!i || !j || *i == 0) unknown("fig4_middle", v);
            const std::string base = "z" + std::to_string(*i) + "_";
            std::vector<Incidence> out;
            if (*j == 0)
                out.push_back({"s" + std::to_string(*i) + "_0", x(*i), false});
            else
                out.push_back({"s" + std::to_string(*i) + "_" + std::to_string(*j), base + std::to_string(*j - 1), false});
            out.push_back({"s" + std::to_string(*i) + "_" + std::to_string(*j + 1), base + std::to_string(*j + 1), false});
            return out;
        }
        const auto i = v.starts_with("x") ? index_after(v, 1) : std::nullopt;
        if (!i) unknown("fig4_middle", v);
        std::vector<Incidence> out;
        if (*i > 0) out.push_back({"r" + std::to_string(*i - 1), x(*i - 1), false});
        out.push_back({"r" + std::to_string(*i), x(*i + 1), false});
        if (*i >= 1) {
            const auto s = std::to_string(*i);
            out.push_back({"l" + s, v, true});
            out.push_back({"s" + s + "_0", "z" + s + "_0", false});
        }
        return out;
    }
    std::optional<StandardGraphDescriptor> descriptor() const override {
        return StandardGraphDescriptor{Rank::infinite(), ConvergentSequence{true}};
    }
    std::string provenance() const override { return "builtin:fig4_middle"; }
};

class Fig4Cantor final : public GraphOracle {
public:
    VertexId root() const override { return "b"; }
    std::vector<Incidence> incident(const VertexId& v) const override {
        if (v.empty() || v[0] != 'b') unknown("fig4_cantor", v);
        for (std::size_t i = 1; i < v.size(); ++i)
            if (v[i] != '0' && v[i] != '1') unknown("fig4_cantor", v);
        const std::string word = v.substr(1);
        std::vector<Incidence> out;
        if (!word.empty()) out.push_back({"e" + word, v.substr(0, v.size() - 1), false});
        out.push_back({"e" + word + "0", v + "0", false});
        out.push_back({"e" + word + "1", v + "1", false});
        if (!word.empty() && word[0] == '0') out.push_back({"l" + word, v, true});
        return out;
    }
    std::optional<StandardGraphDescriptor> descriptor() const override {
        return StandardGraphDescriptor{Rank::infinite(), CantorPair{CantorLoopPart::ProperClopen}};
    }
    std::string provenance() const override { return "builtin:fig4_cantor"; }
};

}  // namespace

OraclePtr ray() { return std::make_shared<Ray>(); }
OraclePtr regular_tree(std::size_t k) { return std::make_shared<RegularTree>(k); }
OraclePtr loch_ness() { return std::make_shared<LochNess>(); }
OraclePtr fig4_first() { return std::make_shared<Fig4First>(); }
OraclePtr fig4_middle() { return std::make_shared<Fig4Middle>(); }
OraclePtr fig4_cantor() { return std::make_shared<Fig4Cantor>(); }

OraclePtr by_name(const std::string& name) {
    if (name == "loch_ness") return loch_ness();
    if (name == "ray") return ray();
    if (name == "tree3") return regular_tree(3);
    if (name == "fig4_first") return fig4_first();
    if (name == "fig4_middle") return fig4_middle();
    if (name == "fig4_cantor") return fig4_cantor();
    if (name.starts_with("tree:")) {
        const auto k = index_after(name, 5);
        if (k) return regular_tree(*k);
    }
    throw DomainError("unknown builtin graph '" + name + "'");
}

std::vector<std::string> names() {
    return {"loch_ness", "ray", "tree3", "fig4_first", "fig4_middle", "fig4_cantor"};
}

}  // namespace endgraph::builtins
