#pragma once

// Anti-automorphisms of the operator ring that fix the polynomials.

#include <map>
#include <vector>

#include "weyl/diffop.hpp"

namespace weyl {

/// f d^[alpha] -> (-1)^|alpha| d^[alpha] f, renormalized.
DiffOp standard_transpose(const DiffOp& xi);

/// The characteristic-0 map x_i -> x_i, d_i -> -d_i + f_i, where f_i is a
/// polynomial in x_i alone, extended anti-multiplicatively.
DiffOp twisted_transpose(const std::vector<Polynomial>& twist, const DiffOp& xi);

/// Throws DomainError unless the twist is usable: characteristic 0, one
/// polynomial per variable, f_i involving x_i only.
void validate_twist(const PolyRing& ring, const std::vector<Polynomial>& twist);

class AntiAutomorphism {
 public:
  enum class Kind { standard, twisted };

  static AntiAutomorphism standard(const PolyRing& ring);
  /// Validates the twist and checks the images of x_i, d_i against the
  /// reversed Weyl relations before accepting it.
  static AntiAutomorphism twisted(const PolyRing& ring, std::vector<Polynomial> twist);

  Kind kind() const { return kind_; }
  const PolyRing& ring() const { return ring_; }
  const std::vector<Polynomial>& twist() const { return twist_; }

  DiffOp operator()(const DiffOp& xi) const;

 private:
  AntiAutomorphism(PolyRing ring, Kind kind, std::vector<Polynomial> twist)
      : ring_(std::move(ring)), kind_(kind), twist_(std::move(twist)) {}

  PolyRing ring_;
  Kind kind_;
  std::vector<Polynomial> twist_;
};

/// For the images y_i = phi(x_i), D_i = phi(d_i): [D_i, y_j] = -delta_ij,
/// [y_i, y_j] = 0, [D_i, D_j] = 0. In characteristic p this is necessary but
/// not sufficient, since x_i and d_i no longer generate the ring.
bool satisfies_reversed_weyl_relations(const AntiAutomorphism& phi);

/// order(phi(xi) + (-1)^(n+1) xi) <= n - 1 where n = order(xi). Throws for xi = 0.
bool check_graded_sign(const DiffOp& xi, const AntiAutomorphism& phi);

struct DerivationCheck {
  bool holds;
  Polynomial value_at_one;  // phi(theta)(1)
};

/// phi(theta) = -theta + phi(theta)(1) for a derivation theta.
/// Throws DomainError when theta is not a derivation.
DerivationCheck derivation_formula_check(const DiffOp& theta, const AntiAutomorphism& phi);

/// Conjugation xi -> A o xi o A^-1 by the algebra automorphism A of S given by
/// an invertible linear ring map. The result is rebuilt in normal form from
/// its values on the monomials of degree <= order(xi).
DiffOp transport_via_coordinates(const RingMap& m, const DiffOp& xi);

/// Outcome of the bounded search for anti-automorphisms of D(F_2[x]) fixing
/// F_2[x] with phi(d) = a + b d. The relation [d, x] = 1 forces b = -1, and
/// d d = 2 d^[2] = 0 forces (a + b d)^2 = 0, i.e. a^2 = d(a), a linear system
/// over F_2 in the coefficients a_0..a_bound.
struct RigidityReport {
  unsigned degree_bound;
  FieldElem forced_b;
  /// Dimension of the solution space for a; 0 means a = 0 is forced.
  std::size_t solution_dimension;
  /// Links a_i -> a_j read off the equations a_i^2 = a_j.
  std::map<unsigned, unsigned> recursion;
  /// From each i, the chain i -> 2i+1 -> ... ending at the first index beyond the bound.
  std::vector<std::vector<unsigned>> chains;
};

RigidityReport level_one_rigidity_search(unsigned degree_bound);

}  // namespace weyl
