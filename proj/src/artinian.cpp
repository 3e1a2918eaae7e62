#include "weyl/artinian.hpp"

#include <algorithm>

#include "weyl/errors.hpp"

namespace weyl {

namespace {

Matrix columns_to_matrix(FieldSpec spec, std::size_t rows, const std::vector<std::vector<FieldElem>>& cols) {
  Matrix m(spec, rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  return m;
}

}  // namespace

ArtinianAlgebra::ArtinianAlgebra(FieldSpec spec, MultiExp exponents, std::optional<std::vector<FieldElem>> unit)
    : spec_(spec), exponents_(std::move(exponents)), pairing_(spec, 0, 0), pairing_inverse_(spec, 0, 0) {
  if (exponents_.size() == 0) throw DomainError("need at least one variable");
  MultiExp top = exponents_;
  for (std::size_t i = 0; i < top.size(); ++i) {
    if (top[i] == 0) throw DomainError("quotient exponents must be >= 1");
    top[i] -= 1;
  }
  for_each_below(top, [&](const MultiExp& mu) { basis_.push_back(mu); });

  const std::size_t n = basis_.size();
  if (unit) {
    if (unit->size() != n) throw DomainError("unit must be given in the monomial basis");
    for (const auto& c : *unit)
      if (!(c.spec() == spec_)) throw DomainError("unit coefficient from a different field");
    if ((*unit)[0].is_zero()) throw DomainError("socle rescaling must be a unit (nonzero constant term)");
    unit_ = *unit;
  } else {
    unit_ = basis_vector(0);
  }

  pairing_ = Matrix(spec_, n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) pairing_(i, j) = socle_functional(multiply(basis_vector(i), basis_vector(j)));
  if (rank(pairing_) != n) throw DomainError("socle pairing is degenerate");
  pairing_inverse_ = inverse(pairing_);
}

std::size_t ArtinianAlgebra::index_of(const MultiExp& mu) const {
  auto it = std::lower_bound(basis_.begin(), basis_.end(), mu);
  if (it == basis_.end() || !(*it == mu)) throw DomainError("monomial is not a basis element of the quotient");
  return static_cast<std::size_t>(it - basis_.begin());
}

MultiExp ArtinianAlgebra::socle() const { return basis_.back(); }

std::vector<FieldElem> ArtinianAlgebra::basis_vector(std::size_t i) const {
  std::vector<FieldElem> v(basis_.size(), FieldElem(spec_));
  v.at(i) = FieldElem(spec_, 1L);
  return v;
}

std::vector<FieldElem> ArtinianAlgebra::multiply(const std::vector<FieldElem>& f,
                                                 const std::vector<FieldElem>& g) const {
  const std::size_t n = basis_.size();
  if (f.size() != n || g.size() != n) throw DomainError("element length does not match the algebra");
  std::vector<FieldElem> out(n, FieldElem(spec_));
  for (std::size_t i = 0; i < n; ++i) {
    if (f[i].is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (g[j].is_zero()) continue;
      const MultiExp prod = basis_[i] + basis_[j];
      bool survives = true;
      for (std::size_t v = 0; v < prod.size(); ++v) survives = survives && prod[v] < exponents_[v];
      if (survives) out[index_of(prod)] += f[i] * g[j];
    }
  }
  return out;
}

FieldElem ArtinianAlgebra::socle_functional(const std::vector<FieldElem>& f) const {
  return multiply(unit_, f).back();
}

bool ArtinianAlgebra::pairing_is_permutation() const {
  const std::size_t n = basis_.size();
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const FieldElem& v = pairing_(i, j);
      if (v.is_one()) {
        ++ones;
      } else if (!v.is_zero()) {
        return false;
      }
    }
    if (ones != 1) return false;
  }
  return true;
}

EndOperator identity_operator(const ArtinianAlgebra& a) { return {Matrix::identity(a.spec(), a.dimension())}; }

EndOperator multiplication_operator(const ArtinianAlgebra& a, const std::vector<FieldElem>& f) {
  const std::size_t n = a.dimension();
  Matrix m(a.spec(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const auto col = a.multiply(f, a.basis_vector(j));
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col[i];
  }
  return {m};
}

EndOperator multiplication_by_monomial(const ArtinianAlgebra& a, const MultiExp& mu) {
  return multiplication_operator(a, a.basis_vector(a.index_of(mu)));
}

EndOperator from_diffop(const ArtinianAlgebra& a, const DiffOp& xi) {
  const PolyRing& ring = xi.ring();
  if (!(ring.spec() == a.spec()) || ring.nvars() != a.nvars()) {
    throw DomainError("operator ring does not match the quotient algebra");
  }
  const std::size_t n = a.dimension();
  Matrix m(a.spec(), n, n);
  for (std::size_t j = 0; j < n; ++j) {
    const Polynomial image = apply(xi, Polynomial::monomial(ring, a.basis()[j]));
    for (const auto& [mu, c] : image.terms()) {
      bool survives = true;
      for (std::size_t v = 0; v < mu.size(); ++v) survives = survives && mu[v] < a.exponents()[v];
      if (survives) m(a.index_of(mu), j) = c;
    }
  }
  return {m};
}

EndOperator compose(const EndOperator& f, const EndOperator& g) { return {f.matrix * g.matrix}; }

EndOperator commutator(const EndOperator& f, const EndOperator& g) {
  return {f.matrix * g.matrix - g.matrix * f.matrix};
}

std::vector<FieldElem> apply(const EndOperator& f, const std::vector<FieldElem>& v) {
  if (v.size() != f.matrix.cols()) throw DomainError("vector length does not match operator");
  std::vector<FieldElem> out(f.matrix.rows(), FieldElem(f.matrix.spec()));
  for (std::size_t i = 0; i < f.matrix.rows(); ++i)
    for (std::size_t j = 0; j < f.matrix.cols(); ++j)
      if (!v[j].is_zero()) out[i] += f.matrix(i, j) * v[j];
  return out;
}

std::vector<FieldElem> vectorize(const EndOperator& f) {
  std::vector<FieldElem> v;
  v.reserve(f.matrix.rows() * f.matrix.cols());
  for (std::size_t j = 0; j < f.matrix.cols(); ++j)
    for (std::size_t i = 0; i < f.matrix.rows(); ++i) v.push_back(f.matrix(i, j));
  return v;
}

EndOperator unvectorize(const ArtinianAlgebra& a, const std::vector<FieldElem>& v) {
  const std::size_t n = a.dimension();
  if (v.size() != n * n) throw DomainError("vector length does not match End_k(R)");
  Matrix m(a.spec(), n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) m(i, j) = v[j * n + i];
  return {m};
}

std::vector<std::size_t> OrderFiltration::dimensions() const {
  std::vector<std::size_t> dims;
  for (const auto& l : levels) dims.push_back(l.cols());
  return dims;
}

bool OrderFiltration::contains(std::size_t n, const EndOperator& f) const {
  if (levels.empty()) throw DomainError("empty filtration");
  if (n >= levels.size()) {
    if (!stabilized_at) throw DomainError("filtration was not computed up to order " + std::to_string(n));
    n = levels.size() - 1;
  }
  return in_column_span(levels[n], vectorize(f));
}

long OrderFiltration::order_of(const EndOperator& f) const {
  if (f.matrix.is_zero()) return -1;
  for (std::size_t n = 0; n < levels.size(); ++n) {
    if (in_column_span(levels[n], vectorize(f))) return static_cast<long>(n);
  }
  throw DomainError("operator lies outside the computed part of the filtration");
}

OrderFiltration order_filtration(const ArtinianAlgebra& a, std::optional<unsigned> n_max) {
  const std::size_t dim = a.dimension();
  const std::size_t big = dim * dim;
  const unsigned limit = n_max.value_or(static_cast<unsigned>(2 * dim));

  std::vector<EndOperator> gens;
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    if (a.exponents()[i] == 1) {
      gens.push_back({Matrix(a.spec(), dim, dim)});  // x_i = 0 in R
    } else {
      gens.push_back(multiplication_by_monomial(a, MultiExp::unit(a.nvars(), i)));
    }
  }

  // bracket_maps[i] : vec(xi) -> vec([xi, x_i])
  std::vector<Matrix> bracket_maps;
  for (const auto& g : gens) {
    std::vector<std::vector<FieldElem>> cols;
    for (std::size_t k = 0; k < big; ++k) {
      std::vector<FieldElem> e(big, FieldElem(a.spec()));
      e[k] = FieldElem(a.spec(), 1L);
      cols.push_back(vectorize(commutator(unvectorize(a, e), g)));
    }
    bracket_maps.push_back(columns_to_matrix(a.spec(), big, cols));
  }

  OrderFiltration out;
  Matrix previous(a.spec(), big, 0);  // D^(-1) = 0
  for (unsigned n = 0; n <= limit; ++n) {
    // Rows of `annihilator` cut out the previous level.
    const Matrix annihilator = kernel(previous.transposed()).transposed();
    Matrix constraints(a.spec(), 0, big);
    for (const auto& b : bracket_maps) {
      const Matrix piece = annihilator * b;
      Matrix stacked(a.spec(), constraints.rows() + piece.rows(), big);
      for (std::size_t i = 0; i < constraints.rows(); ++i)
        for (std::size_t j = 0; j < big; ++j) stacked(i, j) = constraints(i, j);
      for (std::size_t i = 0; i < piece.rows(); ++i)
        for (std::size_t j = 0; j < big; ++j) stacked(constraints.rows() + i, j) = piece(i, j);
      constraints = std::move(stacked);
    }
    Matrix current = kernel(constraints);
    const bool stable = n > 0 && current.cols() == previous.cols();
    out.levels.push_back(current);
    if (stable) {
      out.stabilized_at = n;
      break;
    }
    previous = std::move(current);
  }
  return out;
}

EndOperator socle_adjoint(const ArtinianAlgebra& a, const EndOperator& xi) {
  // (Y f)^T G g = f^T G X g for all f, g  =>  Y = G^-1 X^T G  (G symmetric)
  const Matrix& g = a.pairing_matrix();
  return {a.pairing_inverse() * xi.matrix.transposed() * g};
}

bool verify_order_preservation(const ArtinianAlgebra& a, const OrderFiltration& filt, const EndOperator& xi,
                               std::size_t n) {
  if (!filt.contains(n, xi)) throw DomainError("operator is not in D^" + std::to_string(n));
  return filt.contains(n, socle_adjoint(a, xi));
}

std::vector<EndOperator> graded_piece_basis(const ArtinianAlgebra& a, const OrderFiltration& filt, std::size_t n) {
  if (n >= filt.levels.size()) throw DomainError("filtration level out of range");
  const std::size_t big = a.dimension() * a.dimension();
  Matrix span = n == 0 ? Matrix(a.spec(), big, 0) : filt.levels[n - 1];
  std::size_t r = rank(span);
  std::vector<EndOperator> out;
  const Matrix& level = filt.levels[n];
  for (std::size_t j = 0; j < level.cols(); ++j) {
    Matrix col(a.spec(), big, 1);
    for (std::size_t i = 0; i < big; ++i) col(i, 0) = level(i, j);
    Matrix extended = hstack(span, col);
    const std::size_t r2 = rank(extended);
    if (r2 > r) {
      out.push_back(unvectorize(a, level.column(j)));
      span = std::move(extended);
      r = r2;
    }
  }
  return out;
}

}  // namespace weyl
