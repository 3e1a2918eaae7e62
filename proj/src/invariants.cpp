#include "weyl/invariants.hpp"

#include <algorithm>

#include "weyl/errors.hpp"
#include "weyl/transpose.hpp"

namespace weyl {

GroupElement::GroupElement(Matrix m) : m_(std::move(m)), inv_(m_.spec(), 0, 0) {
  if (m_.rows() != m_.cols()) throw DomainError("group element must be square");
  if (determinant(m_).is_zero()) throw DomainError("group element must be invertible");
  inv_ = inverse(m_);
}

bool GroupElement::is_identity() const { return m_ == Matrix::identity(m_.spec(), m_.rows()); }

RingMap GroupElement::ring_map(const PolyRing& ring) const {
  if (!(ring.spec() == m_.spec()) || ring.nvars() != m_.rows()) {
    throw DomainError("group element does not match the ring");
  }
  return RingMap::linear(ring, m_).with_inverse(RingMap::linear(ring, inv_));
}

GroupElement operator*(const GroupElement& a, const GroupElement& b) { return GroupElement(a.m_ * b.m_); }

FiniteGroup::FiniteGroup(PolyRing ring, std::vector<GroupElement> elements)
    : ring_(std::move(ring)), elements_(std::move(elements)) {
  if (elements_.empty()) throw DomainError("a group needs at least the identity");
  for (const auto& g : elements_) {
    if (!(g.matrix().spec() == ring_.spec()) || g.dimension() != ring_.nvars()) {
      throw DomainError("group element does not match the ring");
    }
  }
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t j = i + 1; j < elements_.size(); ++j) {
      if (elements_[i] == elements_[j]) throw DomainError("duplicate group element");
    }
  }
  const auto has_identity =
      std::any_of(elements_.begin(), elements_.end(), [](const GroupElement& g) { return g.is_identity(); });
  if (!has_identity) throw DomainError("group does not contain the identity");
  for (const auto& g : elements_) {
    if (!contains(GroupElement(g.inverse_matrix()))) throw DomainError("group is not closed under inverses");
    for (const auto& h : elements_) {
      if (!contains(g * h)) throw DomainError("group is not closed under products");
    }
  }
  const auto p = ring_.spec().characteristic();
  if (p != 0 && elements_.size() % p == 0) {
    throw DomainError("characteristic divides the group order");
  }
}

bool FiniteGroup::contains(const GroupElement& g) const {
  return std::find(elements_.begin(), elements_.end(), g) != elements_.end();
}

bool is_pseudoreflection(const GroupElement& g) {
  if (g.is_identity()) return false;
  const Matrix shifted = g.matrix() - Matrix::identity(g.matrix().spec(), g.dimension());
  return rank(shifted) == 1;
}

std::vector<std::size_t> pseudoreflection_indices(const FiniteGroup& group) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < group.order(); ++i)
    if (is_pseudoreflection(group.elements()[i])) out.push_back(i);
  return out;
}

Polynomial act_on_poly(const GroupElement& g, const Polynomial& f) {
  return apply_ring_map(g.ring_map(f.ring()), f);
}

DiffOp act_on_op(const GroupElement& g, const DiffOp& xi) {
  return transport_via_coordinates(g.ring_map(xi.ring()), xi);
}

DiffOp reynolds(const FiniteGroup& group, const DiffOp& xi) {
  check_same_ring(group.ring(), xi.ring());
  const FieldElem size(group.ring().spec(), static_cast<long>(group.order()));
  if (size.is_zero()) throw DomainError("group order is not invertible in the field");
  DiffOp sum(xi.ring());
  for (const auto& g : group.elements()) sum += act_on_op(g, xi);
  return size.inverse() * sum;
}

bool is_invariant(const FiniteGroup& group, const DiffOp& xi) {
  check_same_ring(group.ring(), xi.ring());
  return std::all_of(group.elements().begin(), group.elements().end(),
                     [&](const GroupElement& g) { return act_on_op(g, xi) == xi; });
}

bool equivariance_check(const FiniteGroup& group, const DiffOp& xi, bool allow_positive_characteristic) {
  check_same_ring(group.ring(), xi.ring());
  if (!group.ring().spec().is_rational() && !allow_positive_characteristic) {
    throw DomainError("equivariance check in positive characteristic is experimental; pass the flag to run it");
  }
  const DiffOp phi_xi = standard_transpose(xi);
  return std::all_of(group.elements().begin(), group.elements().end(), [&](const GroupElement& g) {
    return standard_transpose(act_on_op(g, xi)) == act_on_op(g, phi_xi);
  });
}

}  // namespace weyl
