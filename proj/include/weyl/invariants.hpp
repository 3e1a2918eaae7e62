#pragma once

// Finite linear groups acting on S = k[x_1..x_n] and on its operator ring.
//
// A matrix g acts on the variables through its columns, g . x_j = sum_i g(i,j) x_i,
// which is a left action: (gh) . f = g . (h . f). On operators,
// (g . xi)(f) = g xi(g^-1 f).

#include <vector>

#include "weyl/diffop.hpp"
#include "weyl/linalg.hpp"

namespace weyl {

class GroupElement {
 public:
  /// Throws DomainError unless square and invertible.
  explicit GroupElement(Matrix m);

  const Matrix& matrix() const { return m_; }
  const Matrix& inverse_matrix() const { return inv_; }
  std::size_t dimension() const { return m_.rows(); }
  bool is_identity() const;
  /// Substitution automorphism of S with certified inverse.
  RingMap ring_map(const PolyRing& ring) const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend bool operator==(const GroupElement& a, const GroupElement& b) { return a.m_ == b.m_; }

 private:
  Matrix m_;
  Matrix inv_;
};

class FiniteGroup {
 public:
  /// Checks closure under products and inverses and presence of the identity.
  /// In characteristic p requires p not dividing the order.
  FiniteGroup(PolyRing ring, std::vector<GroupElement> elements);

  const PolyRing& ring() const { return ring_; }
  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t order() const { return elements_.size(); }
  bool contains(const GroupElement& g) const;

 private:
  PolyRing ring_;
  std::vector<GroupElement> elements_;
};

/// g != I and rank(g - I) = 1.
bool is_pseudoreflection(const GroupElement& g);
std::vector<std::size_t> pseudoreflection_indices(const FiniteGroup& group);

Polynomial act_on_poly(const GroupElement& g, const Polynomial& f);
DiffOp act_on_op(const GroupElement& g, const DiffOp& xi);

/// (1/|G|) sum_g g . xi. Throws DomainError when |G| = 0 in k.
DiffOp reynolds(const FiniteGroup& group, const DiffOp& xi);
bool is_invariant(const FiniteGroup& group, const DiffOp& xi);

/// Phi(g . xi) == g . Phi(xi) for every g, Phi the standard transposition.
/// Characteristic p is refused unless `allow_positive_characteristic` is set.
bool equivariance_check(const FiniteGroup& group, const DiffOp& xi, bool allow_positive_characteristic = false);

}  // namespace weyl
