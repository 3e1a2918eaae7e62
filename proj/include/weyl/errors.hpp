#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace weyl {

// Raised when an operation's precondition does not hold (arity or ring
// mismatch, wrong characteristic, level overflow, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : std::runtime_error(what + " at " + std::to_string(line) + ":" + std::to_string(column)),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace weyl
