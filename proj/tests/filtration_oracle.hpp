#pragma once

#include <vector>

#include "weyl/artinian.hpp"

namespace weyl::testing {

// D^n from the defining recursion, bracketing against every basis monomial
// rather than only the generators.
inline std::vector<std::size_t> brute_force_dimensions(const ArtinianAlgebra& a, unsigned n_max) {
  const std::size_t big = a.dimension() * a.dimension();
  std::vector<Matrix> brackets;
  for (const auto& mu : a.basis()) {
    const EndOperator f = multiplication_by_monomial(a, mu);
    Matrix b(a.spec(), big, big);
    for (std::size_t k = 0; k < big; ++k) {
      std::vector<FieldElem> e(big, FieldElem(a.spec()));
      e[k] = FieldElem(a.spec(), 1L);
      const auto col = vectorize(commutator(unvectorize(a, e), f));
      for (std::size_t i = 0; i < big; ++i) b(i, k) = col[i];
    }
    brackets.push_back(b);
  }
  std::vector<std::size_t> dims;
  Matrix previous(a.spec(), big, 0);
  for (unsigned n = 0; n <= n_max; ++n) {
    const Matrix ann = kernel(previous.transposed()).transposed();
    Matrix all(a.spec(), 0, big);
    for (const auto& b : brackets) {
      const Matrix piece = ann * b;
      Matrix next(a.spec(), all.rows() + piece.rows(), big);
      for (std::size_t i = 0; i < all.rows(); ++i)
        for (std::size_t j = 0; j < big; ++j) next(i, j) = all(i, j);
      for (std::size_t i = 0; i < piece.rows(); ++i)
        for (std::size_t j = 0; j < big; ++j) next(all.rows() + i, j) = piece(i, j);
      all = std::move(next);
    }
    previous = kernel(all);
    dims.push_back(previous.cols());
  }
  return dims;
}

}  // namespace weyl::testing
