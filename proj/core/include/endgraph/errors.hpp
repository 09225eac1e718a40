#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace endgraph {

// Raised when an input violates a domain precondition (unknown vertex,
// unrealizable descriptor, invalid closed set, ...).
class DomainError : public std::runtime_error {
public:
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Text-format parse failure with a 1-based source location.
class ParseError : public DomainError {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message);

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }
    const std::string& message() const { return message_; }

private:
    std::size_t line_;
    std::size_t column_;
    std::string message_;
};

}  // namespace endgraph
