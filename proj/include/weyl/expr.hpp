#pragma once

// Operator expressions. Grammar, loosest binding first:
//
//   expr  := term (('+' | '-') term)*
//   term  := unary ('*'? unary)*          juxtaposition is a product
//   unary := '-' unary | power
//   power := atom ('^' INT)?
//   atom  := INT ('/' INT)? | IDENT | 'd' '[' INT (',' INT)* ']' | '(' expr ')'
//
// Products are compositions and never commute. An identifier is a ring
// variable, or `d<i>` / `d<name>` for the partial derivative in that variable.

#include <cstdint>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "weyl/diffop.hpp"

namespace weyl {

struct SessionConfig {
  FieldSpec field;
  std::vector<std::string> var_names{"x1"};
  bool json = false;
  unsigned e = 1;
  unsigned degree_bound = 2;

  /// Throws DomainError on an empty or malformed variable list.
  PolyRing ring() const;
};

/// Default names x1..xn.
std::vector<std::string> default_var_names(std::size_t n);

struct Expr {
  enum class Kind { literal, variable, symbol, sum, difference, product, negate, power };

  Kind kind = Kind::literal;
  mpq_class literal;      // literal
  std::size_t var = 0;    // variable
  MultiExp exponent;      // symbol
  std::uint64_t power = 0;
  std::vector<Expr> children;
  std::size_t line = 1;
  std::size_t column = 1;
};

/// Throws ParseError with the offending position.
Expr parse(const std::string& src, const PolyRing& ring);
inline Expr parse(const std::string& src, const SessionConfig& cfg) { return parse(src, cfg.ring()); }

/// Throws DomainError for literals that do not live in the field.
DiffOp eval(const Expr& expr, const PolyRing& ring);

DiffOp parse_operator(const std::string& src, const PolyRing& ring);
/// As parse_operator, but the result must be a multiplication operator.
Polynomial parse_polynomial(const std::string& src, const PolyRing& ring);

}  // namespace weyl
