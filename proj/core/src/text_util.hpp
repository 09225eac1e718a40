#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "endgraph/errors.hpp"

namespace endgraph::detail {

struct Token {
    std::string text;
    std::size_t column = 1;  // 1-based
};

struct Line {
    std::size_t number = 1;  // 1-based
    std::vector<Token> tokens;

    [[noreturn]] void fail(std::size_t token_index, const std::string& message) const {
        const std::size_t col = token_index < tokens.size() ? tokens[token_index].column
                                : tokens.empty()            ? 1
                                                            : tokens.back().column + tokens.back().text.size();
        throw ParseError(number, col, message);
    }
};

// Non-empty lines split on whitespace; '#' starts a comment line.
std::vector<Line> tokenize(std::string_view text);

// Splits "key=value"; fails on the line if the token has no '='.
std::pair<std::string, std::string> key_value(const Line& line, std::size_t index);

unsigned long long parse_unsigned(const Line& line, std::size_t index, std::string_view digits);

}  // namespace endgraph::detail
