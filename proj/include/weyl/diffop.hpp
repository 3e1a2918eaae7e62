#pragma once

// Differential operators on k[x_1..x_n] in the normal form
//
//     xi = sum_alpha f_alpha * d^[alpha]
//
// with coefficients on the left. d^[alpha] is the divided-power operator
// d^[alpha](x^beta) = binom(beta, alpha) x^(beta - alpha). The ring is free as
// a left module on the d^[alpha], so equality of term maps is operator
// equality.

#include <cstdint>
#include <functional>
#include <map>

#include "weyl/polyring.hpp"

namespace weyl {

class DiffOp {
 public:
  using Terms = std::map<MultiExp, Polynomial, GrlexGreater>;

  explicit DiffOp(PolyRing ring) : ring_(std::move(ring)) {}

  /// Multiplication by f.
  static DiffOp multiplication(const Polynomial& f);
  static DiffOp divided_power(const PolyRing& ring, const MultiExp& alpha);
  /// d_i = d^[e_i].
  static DiffOp partial(const PolyRing& ring, std::size_t i);
  /// f * d^[alpha].
  static DiffOp term(const Polynomial& f, const MultiExp& alpha);

  const PolyRing& ring() const { return ring_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Only the d^[0] coefficient is present.
  bool is_multiplication() const;
  /// The d^[alpha] coefficient (zero when absent).
  Polynomial coefficient(const MultiExp& alpha) const;

  void add_term(const MultiExp& alpha, const Polynomial& f);

  DiffOp& operator+=(const DiffOp& o);
  DiffOp& operator-=(const DiffOp& o);
  DiffOp& operator*=(const FieldElem& c);
  friend DiffOp operator+(DiffOp a, const DiffOp& b) { return a += b; }
  friend DiffOp operator-(DiffOp a, const DiffOp& b) { return a -= b; }
  friend DiffOp operator*(const FieldElem& c, DiffOp a) { return a *= c; }
  DiffOp operator-() const;
  /// Left multiplication by a polynomial: f * sum g_a d^[a] = sum (f g_a) d^[a].
  friend DiffOp operator*(const Polynomial& f, const DiffOp& xi);

  friend bool operator==(const DiffOp& a, const DiffOp& b);

 private:
  PolyRing ring_;
  Terms terms_;
};

/// d^[alpha](f).
Polynomial apply_divided_power(const MultiExp& alpha, const Polynomial& f);
Polynomial apply(const DiffOp& xi, const Polynomial& f);

/// Composition xi o eta, renormalized.
DiffOp mul(const DiffOp& xi, const DiffOp& eta);
inline DiffOp operator*(const DiffOp& xi, const DiffOp& eta) { return mul(xi, eta); }
DiffOp power(const DiffOp& xi, std::uint64_t k);
DiffOp bracket(const DiffOp& xi, const DiffOp& eta);

/// max |alpha| over the support; -1 for the zero operator.
long order(const DiffOp& xi);

/// Order computed from the bracket recursion alone: 0 has order -1 and
/// xi has order n when every [xi, x^beta] (0 < |beta| <= degree_bound) has
/// order <= n-1, with equality attained. Throws DomainError for xi = 0.
long order_by_bracket_oracle(const DiffOp& xi, unsigned degree_bound = 2);

/// Smallest e with alpha_i < p^e on the support. Zero for xi = 0.
/// Throws DomainError in characteristic 0.
unsigned level(const DiffOp& xi);

/// True iff [xi, (x^beta)^(p^e)] = 0 for every |beta| <= degree_bound.
bool level_by_commutation_oracle(const DiffOp& xi, unsigned e, unsigned degree_bound);

/// Rebuilds the normal form of a k-linear operator known to have order
/// <= order_bound from its values on the monomials x^beta, |beta| <= order_bound.
/// Solves the unitriangular system T(x^beta) = sum_{alpha <= beta} f_alpha binom(beta, alpha) x^(beta-alpha).
DiffOp reconstruct_from_values(const PolyRing& ring, unsigned order_bound,
                               const std::function<Polynomial(const MultiExp&)>& values);

/// As above, restricted to the box alpha_i < bound_i (used for level-e operators).
DiffOp reconstruct_in_box(const PolyRing& ring, const MultiExp& box,
                          const std::function<Polynomial(const MultiExp&)>& values);

}  // namespace weyl
