#include "weyl/levelmat.hpp"

#include <algorithm>

#include "weyl/errors.hpp"

namespace weyl {

FrobeniusBasis::FrobeniusBasis(const PolyRing& ring, unsigned e) : e_(e), q_(frobenius_modulus(ring.spec(), e)) {
  std::uint64_t size = 1;
  for (std::size_t i = 0; i < ring.nvars(); ++i) {
    size *= q_;
    if (size > kMaxLevelMatrixSize) {
      throw DomainError("level matrix would exceed " + std::to_string(kMaxLevelMatrixSize) + " rows");
    }
  }
  MultiExp top(ring.nvars());
  for (std::size_t i = 0; i < top.size(); ++i) top[i] = static_cast<std::uint32_t>(q_ - 1);
  for_each_below(top, [&](const MultiExp& lambda) { monomials_.push_back(lambda); });
}

std::size_t FrobeniusBasis::index_of(const MultiExp& lambda) const {
  auto it = std::lower_bound(monomials_.begin(), monomials_.end(), lambda);
  if (it == monomials_.end() || !(*it == lambda)) throw DomainError("exponent is not in the Frobenius basis");
  return static_cast<std::size_t>(it - monomials_.begin());
}

LevelMatrix::LevelMatrix(PolyRing ring, unsigned e)
    : ring_(std::move(ring)), e_(e), size_(FrobeniusBasis(ring_, e).size()) {
  entries_.assign(size_ * size_, Polynomial(ring_));
}

LevelMatrix::LevelMatrix(PolyRing ring, unsigned e, std::vector<Polynomial> row_major)
    : ring_(std::move(ring)), e_(e), size_(FrobeniusBasis(ring_, e).size()), entries_(std::move(row_major)) {
  if (entries_.size() != size_ * size_) {
    throw DomainError("level matrix needs " + std::to_string(size_ * size_) + " entries, got " +
                      std::to_string(entries_.size()));
  }
  for (const auto& p : entries_) check_same_ring(ring_, p.ring());
}

LevelMatrix LevelMatrix::identity(const PolyRing& ring, unsigned e) {
  LevelMatrix m(ring, e);
  for (std::size_t i = 0; i < m.size_; ++i) m(i, i) = Polynomial::constant(ring, 1);
  return m;
}

void LevelMatrix::check_compatible(const LevelMatrix& o) const {
  check_same_ring(ring_, o.ring_);
  if (e_ != o.e_) throw DomainError("level matrices of different levels");
}

LevelMatrix& LevelMatrix::operator+=(const LevelMatrix& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += o.entries_[i];
  return *this;
}

LevelMatrix operator*(const LevelMatrix& a, const LevelMatrix& b) {
  a.check_compatible(b);
  LevelMatrix c(a.ring_, a.e_);
  const std::size_t n = a.size_;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      const Polynomial& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

bool operator==(const LevelMatrix& a, const LevelMatrix& b) {
  return a.ring_ == b.ring_ && a.e_ == b.e_ && a.entries_ == b.entries_;
}

LevelMatrix to_matrix(const DiffOp& xi, unsigned e) {
  const PolyRing& ring = xi.ring();
  if (ring.spec().is_rational()) throw DomainError("level matrices need positive characteristic");
  if (level(xi) > e) {
    throw DomainError("operator has level " + std::to_string(level(xi)) + " > " + std::to_string(e));
  }
  const FrobeniusBasis basis(ring, e);
  LevelMatrix m(ring, e);
  for (std::size_t col = 0; col < basis.size(); ++col) {
    const Polynomial image = apply(xi, Polynomial::monomial(ring, basis.monomials()[col]));
    for (const auto& [mu, root] : frobenius_decompose(image, e)) m(basis.index_of(mu), col) = root;
  }
  return m;
}

DiffOp to_operator(const LevelMatrix& m) {
  const PolyRing& ring = m.ring();
  const FrobeniusBasis basis = m.basis();
  MultiExp box(ring.nvars());
  for (std::size_t i = 0; i < box.size(); ++i) box[i] = static_cast<std::uint32_t>(basis.modulus());
  return reconstruct_in_box(ring, box, [&](const MultiExp& lambda) {
    const std::size_t col = basis.index_of(lambda);
    Polynomial value(ring);
    for (std::size_t row = 0; row < basis.size(); ++row) {
      const Polynomial& root = m(row, col);
      if (root.is_zero()) continue;
      value += frobenius_power(root, m.e()) * Polynomial::monomial(ring, basis.monomials()[row]);
    }
    return value;
  });
}

bool matrix_mul_consistency(const DiffOp& xi, const DiffOp& eta, unsigned e) {
  return to_matrix(mul(xi, eta), e) == to_matrix(xi, e) * to_matrix(eta, e);
}

}  // namespace weyl
