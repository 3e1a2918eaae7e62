#pragma once

// Level-e operators in characteristic p as square matrices over the subring
// of p^e-th powers, in the free basis {x^lambda : 0 <= lambda_i < p^e}.
//
// Entry convention: entry (mu, lambda) stores the p^e-th ROOT g of the
// coefficient, i.e. xi(x^lambda) = sum_mu g_{mu,lambda}^(p^e) x^mu. Since
// g -> g^(p^e) is a ring isomorphism onto the subring, the roots multiply as
// ordinary polynomials.

#include <cstddef>
#include <vector>

#include "weyl/diffop.hpp"

namespace weyl {

inline constexpr std::size_t kMaxLevelMatrixSize = 256;

class FrobeniusBasis {
 public:
  /// Throws DomainError in characteristic 0 or when p^(en) exceeds kMaxLevelMatrixSize.
  FrobeniusBasis(const PolyRing& ring, unsigned e);

  unsigned e() const { return e_; }
  std::uint64_t modulus() const { return q_; }
  std::size_t size() const { return monomials_.size(); }
  /// Lex ascending.
  const std::vector<MultiExp>& monomials() const { return monomials_; }
  std::size_t index_of(const MultiExp& lambda) const;

 private:
  unsigned e_;
  std::uint64_t q_;
  std::vector<MultiExp> monomials_;
};

class LevelMatrix {
 public:
  /// Zero matrix.
  LevelMatrix(PolyRing ring, unsigned e);
  LevelMatrix(PolyRing ring, unsigned e, std::vector<Polynomial> row_major);

  static LevelMatrix identity(const PolyRing& ring, unsigned e);

  const PolyRing& ring() const { return ring_; }
  unsigned e() const { return e_; }
  std::size_t size() const { return size_; }
  FrobeniusBasis basis() const { return FrobeniusBasis(ring_, e_); }

  const Polynomial& operator()(std::size_t r, std::size_t c) const { return entries_[r * size_ + c]; }
  Polynomial& operator()(std::size_t r, std::size_t c) { return entries_[r * size_ + c]; }
  const std::vector<Polynomial>& entries() const { return entries_; }

  LevelMatrix& operator+=(const LevelMatrix& o);
  friend LevelMatrix operator+(LevelMatrix a, const LevelMatrix& b) { return a += b; }
  friend LevelMatrix operator*(const LevelMatrix& a, const LevelMatrix& b);
  friend bool operator==(const LevelMatrix& a, const LevelMatrix& b);

 private:
  void check_compatible(const LevelMatrix& o) const;

  PolyRing ring_;
  unsigned e_;
  std::size_t size_;
  std::vector<Polynomial> entries_;
};

/// Column lambda holds the Frobenius decomposition of xi(x^lambda).
/// Throws DomainError when level(xi) > e or in characteristic 0.
LevelMatrix to_matrix(const DiffOp& xi, unsigned e);
/// Inverse of to_matrix; the result has level <= e.
DiffOp to_operator(const LevelMatrix& m);
/// to_matrix(xi eta) == to_matrix(xi) to_matrix(eta).
bool matrix_mul_consistency(const DiffOp& xi, const DiffOp& eta, unsigned e);

}  // namespace weyl
