#include "endgraph/errors.hpp"

namespace endgraph {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message)
    : DomainError(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
      line_(line),
      column_(column),
      message_(message) {}

}  // namespace endgraph
