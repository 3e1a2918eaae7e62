#pragma once

// Differential operators on R = k[x]/(x_1^a_1, ..., x_n^a_n) by direct linear
// algebra in End_k(R), with the order filtration computed from the bracket
// recursion and the anti-automorphism given by adjunction under the socle
// pairing <f, g> = sigma(u f g).

#include <optional>
#include <vector>

#include "weyl/diffop.hpp"
#include "weyl/linalg.hpp"

namespace weyl {

class ArtinianAlgebra {
 public:
  /// Monomial basis x^mu, 0 <= mu_i < a_i, lex ascending. `unit` rescales the
  /// socle functional to f -> sigma(u f); it must be a unit of R (nonzero
  /// constant term) given in the monomial basis. Throws DomainError on a
  /// degenerate pairing.
  ArtinianAlgebra(FieldSpec spec, MultiExp exponents, std::optional<std::vector<FieldElem>> unit = std::nullopt);

  const FieldSpec& spec() const { return spec_; }
  const MultiExp& exponents() const { return exponents_; }
  std::size_t nvars() const { return exponents_.size(); }
  std::size_t dimension() const { return basis_.size(); }
  const std::vector<MultiExp>& basis() const { return basis_; }
  std::size_t index_of(const MultiExp& mu) const;
  /// The socle monomial x^(a-1).
  MultiExp socle() const;

  /// Coordinates of the product of two elements.
  std::vector<FieldElem> multiply(const std::vector<FieldElem>& f, const std::vector<FieldElem>& g) const;
  /// sigma(u f): the (rescaled) socle coefficient.
  FieldElem socle_functional(const std::vector<FieldElem>& f) const;
  /// G(mu, nu) = sigma(u x^mu x^nu).
  const Matrix& pairing_matrix() const { return pairing_; }
  const Matrix& pairing_inverse() const { return pairing_inverse_; }
  /// For the canonical functional the pairing matrix is a permutation matrix.
  bool pairing_is_permutation() const;

  std::vector<FieldElem> basis_vector(std::size_t i) const;

 private:
  FieldSpec spec_;
  MultiExp exponents_;
  std::vector<MultiExp> basis_;
  std::vector<FieldElem> unit_;
  Matrix pairing_;
  Matrix pairing_inverse_;
};

/// A k-linear endomorphism of R as a dim x dim matrix in the monomial basis
/// (column j is the image of basis vector j).
struct EndOperator {
  Matrix matrix;
  friend bool operator==(const EndOperator&, const EndOperator&) = default;
};

EndOperator identity_operator(const ArtinianAlgebra& a);
EndOperator multiplication_operator(const ArtinianAlgebra& a, const std::vector<FieldElem>& f);
EndOperator multiplication_by_monomial(const ArtinianAlgebra& a, const MultiExp& mu);
/// x^mu -> truncation of xi(x^mu) modulo the monomial ideal.
EndOperator from_diffop(const ArtinianAlgebra& a, const DiffOp& xi);
EndOperator compose(const EndOperator& f, const EndOperator& g);
EndOperator commutator(const EndOperator& f, const EndOperator& g);
std::vector<FieldElem> apply(const EndOperator& f, const std::vector<FieldElem>& v);

/// Vectorized End_k(R) = k^(dim^2), column-major.
std::vector<FieldElem> vectorize(const EndOperator& f);
EndOperator unvectorize(const ArtinianAlgebra& a, const std::vector<FieldElem>& v);

struct OrderFiltration {
  /// levels[n] has columns spanning D^n inside k^(dim^2).
  std::vector<Matrix> levels;
  /// First n with D^n = D^(n-1), if reached within n_max.
  std::optional<unsigned> stabilized_at;

  std::vector<std::size_t> dimensions() const;
  bool contains(std::size_t n, const EndOperator& f) const;
  /// Smallest n with f in D^n; -1 for f = 0. Throws if f lies outside the computed chain.
  long order_of(const EndOperator& f) const;
};

/// D^0, D^1, ..., D^n_max via nested kernels of xi -> ([xi, x_1], ..., [xi, x_n])
/// modulo D^(n-1), starting from D^(-1) = 0. Stops early once the chain is
/// stable. n_max defaults to 2 dim R.
OrderFiltration order_filtration(const ArtinianAlgebra& a, std::optional<unsigned> n_max = std::nullopt);

/// Phi(xi), characterized by sigma(u Phi(xi)(f) g) = sigma(u f xi(g)).
EndOperator socle_adjoint(const ArtinianAlgebra& a, const EndOperator& xi);

/// Throws DomainError unless xi is in D^n; returns whether Phi(xi) is in D^n.
bool verify_order_preservation(const ArtinianAlgebra& a, const OrderFiltration& filt, const EndOperator& xi,
                               std::size_t n);

/// Basis of a complement of D^(n-1) in D^n (the graded piece), as operators.
std::vector<EndOperator> graded_piece_basis(const ArtinianAlgebra& a, const OrderFiltration& filt, std::size_t n);

}  // namespace weyl
