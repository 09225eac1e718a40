#include "endgraph/closed_set.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#include "endgraph/errors.hpp"
#include "text_util.hpp"

namespace endgraph {

namespace {

template <class... Ts>
struct Overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

bool is_binary(std::string_view w) {
    return std::all_of(w.begin(), w.end(), [](char c) { return c == '0' || c == '1'; });
}

bool automaton_contains(const closed::Automaton& a, std::string_view w) {
    int q = 0;
    if (a.states == 0 || !a.accepting[0]) return false;
    for (char c : w) {
        q = a.next[static_cast<std::size_t>(q)][c == '1' ? 1 : 0];
        if (q == closed::Automaton::kNone || !a.accepting[static_cast<std::size_t>(q)]) return false;
    }
    return true;
}

Word parse_word(const detail::Line& line, std::size_t index, const std::string& text) {
    if (text == "e") return {};
    if (text.empty() || !is_binary(text)) line.fail(index, "expected a binary word, got '" + text + "'");
    return text;
}

}  // namespace

std::string show_word(std::string_view w) { return w.empty() ? std::string("e") : std::string(w); }

bool ClosedSetSpec::contains(std::string_view w) const {
    if (!is_binary(w)) return false;
    return std::visit(
        Overloaded{
            [](const closed::Full&) { return true; },
            [&](const closed::Singleton& s) {
                for (std::size_t i = 0; i < w.size(); ++i) {
                    const char expected = i < s.prefix.size() ? s.prefix[i]
                                                              : s.period[(i - s.prefix.size()) % s.period.size()];
                    if (w[i] != expected) return false;
                }
                return true;
            },
            [&](const closed::CylinderUnion& u) {
                return std::any_of(u.words.begin(), u.words.end(), [&](const Word& c) {
                    const std::size_t n = std::min(c.size(), w.size());
                    return c.compare(0, n, w.substr(0, n)) == 0;
                });
            },
            [&](const closed::Automaton& a) { return automaton_contains(a, w); },
        },
        presentation_);
}

void require_valid(const ClosedSetSpec& c) {
    std::visit(Overloaded{
                   [](const closed::Full&) {},
                   [](const closed::Singleton& s) {
                       if (s.period.empty()) throw DomainError("singleton closed set needs a nonempty period");
                       if (!is_binary(s.prefix) || !is_binary(s.period))
                           throw DomainError("singleton closed set words must be binary");
                   },
                   [](const closed::CylinderUnion& u) {
                       if (u.words.empty()) throw DomainError("closed set is empty: no cylinders listed");
                       for (const auto& w : u.words)
                           if (!is_binary(w)) throw DomainError("cylinder word '" + w + "' is not binary");
                   },
                   [](const closed::Automaton& a) {
                       if (a.states == 0 || a.next.size() != a.states || a.accepting.size() != a.states)
                           throw DomainError("automaton tables do not match its state count");
                       for (const auto& row : a.next)
                           for (int q : row)
                               if (q != closed::Automaton::kNone && (q < 0 || static_cast<std::size_t>(q) >= a.states))
                                   throw DomainError("automaton transition to unknown state " + std::to_string(q));
                       if (!a.accepting[0]) throw DomainError("closed set is empty: word e is not in the tree");
                       // Breadth-first over accepting states, so the reported word is shortest.
                       std::vector<bool> seen(a.states, false);
                       std::deque<std::pair<int, Word>> queue{{0, Word{}}};
                       seen[0] = true;
                       while (!queue.empty()) {
                           auto [q, w] = queue.front();
                           queue.pop_front();
                           bool has_child = false;
                           for (int b = 0; b < 2; ++b) {
                               const int r = a.next[static_cast<std::size_t>(q)][static_cast<std::size_t>(b)];
                               if (r == closed::Automaton::kNone || !a.accepting[static_cast<std::size_t>(r)]) continue;
                               has_child = true;
                               if (!seen[static_cast<std::size_t>(r)]) {
                                   seen[static_cast<std::size_t>(r)] = true;
                                   queue.emplace_back(r, w + static_cast<char>('0' + b));
                               }
                           }
                           if (!has_child) throw DomainError("closed set tree has a dead end: " + show_word(w) + " has no child");
                       }
                   },
               },
               c.presentation());
}

ClosedSetReport validate_closed_set(const ClosedSetSpec& c, std::size_t depth) {
    if (depth > 24) throw DomainError("validation depth is limited to 24");
    ClosedSetReport report;
    if (!c.contains("")) {
        report.violations.push_back("empty set: e is not in the tree");
        return report;
    }
    std::vector<Word> level{Word{}};
    for (std::size_t len = 0; len <= depth; ++len) {
        std::vector<Word> next;
        for (const auto& w : level) {
            const bool in = c.contains(w);
            if (in && !w.empty() && !c.contains(std::string_view(w).substr(0, w.size() - 1)))
                report.violations.push_back(w + " is in the tree but its parent is not");
            if (in && !c.contains(w + '0') && !c.contains(w + '1'))
                report.violations.push_back(show_word(w) + " has no child");
            if (len < depth) {
                next.push_back(w + '0');
                next.push_back(w + '1');
            }
        }
        if (len < depth) level = std::move(next);
    }
    if (std::holds_alternative<closed::Automaton>(c.presentation())) {
        const auto alive = std::count_if(level.begin(), level.end(), [&](const Word& w) { return c.contains(w); });
        if (alive == 1)
            report.warnings.push_back("automaton has a single branch up to depth " + std::to_string(depth) +
                                      "; constructions treat it as a non-singleton");
    }
    return report;
}

std::string to_string(const ClosedSetSpec& c) {
    return std::visit(
        Overloaded{
            [](const closed::Full&) { return std::string("closedset full"); },
            [](const closed::Singleton& s) { return "closedset singleton " + s.prefix + "(" + s.period + ")^w"; },
            [](const closed::CylinderUnion& u) {
                std::string out = "closedset cylinders";
                for (const auto& w : u.words) out += " " + show_word(w);
                return out;
            },
            [](const closed::Automaton& a) {
                std::string out = "closedset dfa " + std::to_string(a.states) + " ";
                bool first = true;
                for (std::size_t q = 0; q < a.states; ++q)
                    for (int b = 0; b < 2; ++b) {
                        const int r = a.next[q][static_cast<std::size_t>(b)];
                        if (r == closed::Automaton::kNone) continue;
                        if (!first) out += ',';
                        first = false;
                        out += std::to_string(q) + "." + std::to_string(b) + "=" + std::to_string(r);
                    }
                if (first) out += '-';
                out += ' ';
                first = true;
                for (std::size_t q = 0; q < a.states; ++q) {
                    if (!a.accepting[q]) continue;
                    if (!first) out += ',';
                    first = false;
                    out += std::to_string(q);
                }
                if (first) out += '-';
                return out;
            },
        },
        c.presentation());
}

ClosedSetSpec parse_closed_set(std::string_view text) {
    const auto lines = detail::tokenize(text);
    if (lines.empty()) throw ParseError(1, 1, "empty closed-set text");
    if (lines.size() > 1) lines[1].fail(0, "unexpected extra line after closed-set statement");
    const auto& line = lines.front();
    const auto& tok = line.tokens;
    if (tok[0].text != "closedset") line.fail(0, "expected 'closedset'");
    if (tok.size() < 2) line.fail(1, "expected full, singleton, cylinders or dfa");
    const auto& kind = tok[1].text;

    ClosedSetSpec spec;
    if (kind == "full") {
        if (tok.size() > 2) line.fail(2, "unexpected token after 'full'");
        spec = ClosedSetSpec::full();
    } else if (kind == "singleton") {
        if (tok.size() != 3) line.fail(std::min<std::size_t>(tok.size(), 3), "expected one word of the form u(v)^w");
        const auto& w = tok[2].text;
        const auto open = w.find('(');
        const auto close = w.rfind(")^w");
        if (open == std::string::npos || close == std::string::npos || close + 3 != w.size() || close < open)
            line.fail(2, "expected u(v)^w, got '" + w + "'");
        closed::Singleton s{w.substr(0, open), w.substr(open + 1, close - open - 1)};
        if (!is_binary(s.prefix) || !is_binary(s.period) || s.period.empty())
            line.fail(2, "singleton needs binary u and nonempty binary v");
        spec = ClosedSetSpec(s);
    } else if (kind == "cylinders") {
        closed::CylinderUnion u;
        for (std::size_t i = 2; i < tok.size(); ++i) u.words.push_back(parse_word(line, i, tok[i].text));
        if (u.words.empty()) line.fail(2, "expected at least one cylinder word");
        spec = ClosedSetSpec(u);
    } else if (kind == "dfa") {
        if (tok.size() != 5) line.fail(std::min<std::size_t>(tok.size(), 5), "expected: dfa <states> <transitions> <accepting>");
        closed::Automaton a;
        a.states = detail::parse_unsigned(line, 2, tok[2].text);
        if (a.states == 0 || a.states > 4096) line.fail(2, "state count must be in 1..4096");
        a.next.assign(a.states, {closed::Automaton::kNone, closed::Automaton::kNone});
        a.accepting.assign(a.states, false);
        auto state = [&](std::size_t index, std::string_view digits) {
            const auto q = detail::parse_unsigned(line, index, digits);
            if (q >= a.states) line.fail(index, "unknown state " + std::string(digits));
            return static_cast<std::size_t>(q);
        };
        if (tok[3].text != "-") {
            std::stringstream items(tok[3].text);
            std::string item;
            while (std::getline(items, item, ',')) {
                const auto dot = item.find('.');
                const auto eq = item.find('=');
                if (dot == std::string::npos || eq == std::string::npos || eq != dot + 2 ||
                    (item[dot + 1] != '0' && item[dot + 1] != '1'))
                    line.fail(3, "expected transitions q.b=q', got '" + item + "'");
                const auto from = state(3, std::string_view(item).substr(0, dot));
                const auto bit = static_cast<std::size_t>(item[dot + 1] - '0');
                const auto to = state(3, std::string_view(item).substr(eq + 1));
                if (a.next[from][bit] != closed::Automaton::kNone)
                    line.fail(3, "duplicate transition " + item.substr(0, eq));
                a.next[from][bit] = static_cast<int>(to);
            }
        }
        if (tok[4].text != "-") {
            std::stringstream items(tok[4].text);
            std::string item;
            while (std::getline(items, item, ',')) a.accepting[state(4, item)] = true;
        }
        spec = ClosedSetSpec(a);
    } else {
        line.fail(1, "unknown closed-set kind '" + kind + "'");
    }
    return spec;
}

}  // namespace endgraph
