#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mak {

/// Raised when an operation is handed arguments outside its contract
/// (non-subset removals, incompatible unions, non-injective maps, ...).
class ArgumentError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A formula or law mentions an agent, fluent or family that is not declared.
class DeclarationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Syntax error with a 1-based source position.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, std::size_t column, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + message),
          line_(line), column_(column) {}

    [[nodiscard]] std::size_t line() const { return line_; }
    [[nodiscard]] std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

} // namespace mak
