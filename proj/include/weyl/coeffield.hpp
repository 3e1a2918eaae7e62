#pragma once

// Exact coefficient arithmetic over Q and F_p, plus the multi-exponent
// combinatorics shared by the polynomial and operator layers.

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace weyl {

bool is_prime(std::uint64_t n);

/// The coefficient field: Q when characteristic() == 0, otherwise F_p.
class FieldSpec {
 public:
  FieldSpec() = default;
  /// Throws DomainError unless `characteristic` is 0 or a prime below 2^32.
  explicit FieldSpec(std::uint64_t characteristic);

  static FieldSpec rationals() { return FieldSpec(); }

  std::uint64_t characteristic() const { return char_; }
  bool is_rational() const { return char_ == 0; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  std::uint64_t char_ = 0;
};

class FieldElem {
 public:
  /// Zero of Q.
  FieldElem() : FieldElem(FieldSpec()) {}
  explicit FieldElem(FieldSpec spec);
  FieldElem(FieldSpec spec, long value);
  FieldElem(FieldSpec spec, const mpz_class& value);
  /// In characteristic p the denominator must be a unit mod p.
  FieldElem(FieldSpec spec, const mpq_class& value);

  /// Parses "a" or "a/b" with optional sign.
  static FieldElem parse(FieldSpec spec, const std::string& text);

  const FieldSpec& spec() const { return spec_; }
  bool is_zero() const;
  bool is_one() const;

  /// Valid only in characteristic 0.
  const mpq_class& rational() const;
  /// Valid only in characteristic p; value in [0, p).
  std::uint64_t residue() const;

  FieldElem inverse() const;
  FieldElem pow(std::uint64_t k) const;

  FieldElem& operator+=(const FieldElem& o);
  FieldElem& operator-=(const FieldElem& o);
  FieldElem& operator*=(const FieldElem& o);
  FieldElem& operator/=(const FieldElem& o);

  friend FieldElem operator+(FieldElem a, const FieldElem& b) { return a += b; }
  friend FieldElem operator-(FieldElem a, const FieldElem& b) { return a -= b; }
  friend FieldElem operator*(FieldElem a, const FieldElem& b) { return a *= b; }
  friend FieldElem operator/(FieldElem a, const FieldElem& b) { return a /= b; }
  FieldElem operator-() const;

  friend bool operator==(const FieldElem& a, const FieldElem& b);

  /// Lowest terms ("-3/4") in char 0, residue in [0, p) in char p.
  std::string to_string() const;

 private:
  void check_same_field(const FieldElem& o) const;

  FieldSpec spec_;
  std::variant<mpq_class, std::uint64_t> value_;
};

/// Exponent vector of a monomial x^a or a divided-power symbol d^[a].
class MultiExp {
 public:
  MultiExp() = default;
  explicit MultiExp(std::size_t n) : e_(n, 0) {}
  MultiExp(std::initializer_list<std::uint32_t> entries) : e_(entries) {}
  explicit MultiExp(std::vector<std::uint32_t> entries) : e_(std::move(entries)) {}

  static MultiExp unit(std::size_t n, std::size_t i);

  std::size_t size() const { return e_.size(); }
  std::uint32_t operator[](std::size_t i) const { return e_[i]; }
  std::uint32_t& operator[](std::size_t i) { return e_[i]; }
  const std::vector<std::uint32_t>& entries() const { return e_; }

  std::uint64_t total() const;
  bool is_zero() const;
  std::uint32_t max_entry() const;

  /// Componentwise order: a <= b iff a_i <= b_i for all i. Throws on arity mismatch.
  bool divides(const MultiExp& other) const;

  MultiExp& operator+=(const MultiExp& o);
  friend MultiExp operator+(MultiExp a, const MultiExp& b) { return a += b; }
  /// Requires b <= a componentwise.
  friend MultiExp operator-(const MultiExp& a, const MultiExp& b);
  MultiExp scaled(std::uint32_t k) const;

  // Lexicographic; used for container ordering only.
  friend auto operator<=>(const MultiExp&, const MultiExp&) = default;
  friend bool operator==(const MultiExp&, const MultiExp&) = default;

 private:
  std::vector<std::uint32_t> e_;
};

void check_same_arity(const MultiExp& a, const MultiExp& b);

/// Graded order, largest first: total degree descending, then lex descending.
/// Every canonical term map in the library iterates in this order.
struct GrlexGreater {
  bool operator()(const MultiExp& a, const MultiExp& b) const {
    const auto ta = a.total();
    const auto tb = b.total();
    if (ta != tb) return ta > tb;
    return a > b;
  }
};

/// Calls fn(beta) for every beta <= alpha, in lex order.
void for_each_below(const MultiExp& alpha, const std::function<void(const MultiExp&)>& fn);

/// All exponents in n variables of total degree <= d, graded ascending.
std::vector<MultiExp> monomials_up_to(std::size_t n, std::uint64_t d);

/// alpha! / (beta! (alpha-beta)!) as an exact integer.
mpz_class multinomial_integer(const MultiExp& alpha, const MultiExp& beta);

/// The integer multinomial reduced into the field; throws unless beta <= alpha.
FieldElem multinomial(const MultiExp& alpha, const MultiExp& beta, FieldSpec spec);

/// sum over beta + delta = sigma of (-1)^|beta| sigma! / (beta! delta!).
mpz_class alternating_multinomial_sum(const MultiExp& sigma);

}  // namespace weyl
