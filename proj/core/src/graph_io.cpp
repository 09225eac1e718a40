#include "endgraph/graph_io.hpp"

#include <sstream>

#include "text_util.hpp"

namespace endgraph {

namespace detail {

std::vector<Line> tokenize(std::string_view text) {
    std::vector<Line> lines;
    std::size_t number = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        ++number;
        std::string_view raw = text.substr(start, end - start);
        Line line{number, {}};
        std::size_t i = 0;
        while (i < raw.size()) {
            while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t' || raw[i] == '\r')) ++i;
            if (i >= raw.size()) break;
            std::size_t j = i;
            while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t' && raw[j] != '\r') ++j;
            line.tokens.push_back({std::string(raw.substr(i, j - i)), i + 1});
            i = j;
        }
        if (!line.tokens.empty() && line.tokens.front().text.front() != '#') lines.push_back(std::move(line));
        start = end + 1;
    }
    return lines;
}

std::pair<std::string, std::string> key_value(const Line& line, std::size_t index) {
    if (index >= line.tokens.size()) line.fail(index, "expected key=value");
    const auto& t = line.tokens[index].text;
    const auto eq = t.find('=');
    if (eq == std::string::npos || eq == 0) line.fail(index, "expected key=value, got '" + t + "'");
    return {t.substr(0, eq), t.substr(eq + 1)};
}

unsigned long long parse_unsigned(const Line& line, std::size_t index, std::string_view digits) {
    if (digits.empty() || digits.size() > 18) line.fail(index, "expected a natural number");
    unsigned long long value = 0;
    for (char c : digits) {
        if (c < '0' || c > '9') line.fail(index, "expected a natural number, got '" + std::string(digits) + "'");
        value = value * 10 + static_cast<unsigned>(c - '0');
    }
    return value;
}

}  // namespace detail

std::string to_text(const FiniteMultigraph& g) {
    std::ostringstream out;
    out << "graph " << g.name();
    if (g.root()) out << " root=" << *g.root();
    out << '\n';
    for (const auto& v : g.vertices()) out << "v " << v << '\n';
    for (const auto& e : g.edge_ids()) {
        const auto& ends = g.endpoints(e);
        out << "e " << e << ' ' << ends.u << ' ' << ends.v << '\n';
    }
    return out.str();
}

FiniteMultigraph parse_graph(std::string_view text) {
    const auto lines = detail::tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "empty graph text");
    const auto& header = lines.front();
    if (header.tokens[0].text != "graph") header.fail(0, "expected 'graph'");
    if (header.tokens.size() < 2) header.fail(1, "expected a graph name");
    FiniteMultigraph g(header.tokens[1].text);
    std::optional<std::pair<std::string, std::size_t>> root;
    for (std::size_t i = 2; i < header.tokens.size(); ++i) {
        auto [key, value] = detail::key_value(header, i);
        if (key != "root") header.fail(i, "unknown key '" + key + "'");
        if (value.empty()) header.fail(i, "empty root id");
        root = {value, i};
    }
    for (std::size_t li = 1; li < lines.size(); ++li) {
        const auto& line = lines[li];
        const auto& kw = line.tokens[0].text;
        try {
            if (kw == "v") {
                if (line.tokens.size() != 2) line.fail(std::min<std::size_t>(line.tokens.size(), 2), "expected 'v <id>'");
                g.add_vertex(line.tokens[1].text);
            } else if (kw == "e") {
                if (line.tokens.size() != 4)
                    line.fail(std::min<std::size_t>(line.tokens.size(), 4), "expected 'e <id> <u> <v>'");
                g.add_edge(line.tokens[1].text, line.tokens[2].text, line.tokens[3].text);
            } else {
                line.fail(0, "unknown keyword '" + kw + "'");
            }
        } catch (const ParseError&) {
            throw;
        } catch (const DomainError& err) {
            line.fail(1, err.what());
        }
    }
    if (root) {
        if (!g.has_vertex(root->first)) header.fail(root->second, "root '" + root->first + "' is not a vertex");
        g.set_root(root->first);
    }
    return g;
}

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_dot(const FiniteMultigraph& g) {
    std::ostringstream out;
    out << "graph " << quote(g.name()) << " {\n";
    for (const auto& v : g.vertices()) {
        out << "  " << quote(v);
        if (g.root() == v) out << " [shape=doublecircle]";
        out << ";\n";
    }
    for (const auto& e : g.edge_ids()) {
        const auto& ends = g.endpoints(e);
        out << "  " << quote(ends.u) << " -- " << quote(ends.v) << " [label=" << quote(e);
        if (ends.is_loop()) out << ", color=blue";
        out << "];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace endgraph
