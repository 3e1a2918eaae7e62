#include "weyl/linalg.hpp"

#include "weyl/errors.hpp"

namespace weyl {

Matrix::Matrix(FieldSpec spec, std::size_t rows, std::size_t cols)
    : spec_(spec), rows_(rows), cols_(cols), data_(rows * cols, FieldElem(spec)) {}

Matrix Matrix::identity(FieldSpec spec, std::size_t n) {
  Matrix m(spec, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElem(spec, 1L);
  return m;
}

Matrix Matrix::from_rows(FieldSpec spec, const std::vector<std::vector<FieldElem>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows.front().size() : 0;
  Matrix m(spec, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DomainError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) {
      if (!(rows[i][j].spec() == spec)) throw DomainError("matrix entry from a different field");
      m(i, j) = rows[i][j];
    }
  }
  return m;
}

Matrix Matrix::transposed() const {
  Matrix t(spec_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

std::vector<FieldElem> Matrix::column(std::size_t c) const {
  std::vector<FieldElem> v;
  v.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, c));
  return v;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DomainError("matrix shape mismatch in product");
  Matrix c(a.spec_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const FieldElem& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (!b(k, j).is_zero()) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

Matrix operator*(const FieldElem& s, Matrix m) {
  for (auto& v : m.data_) v *= s;
  return m;
}

bool Matrix::is_zero() const {
  for (const auto& v : data_)
    if (!v.is_zero()) return false;
  return true;
}

RowEchelon row_reduce(Matrix m) {
  RowEchelon out{m, {}};
  Matrix& a = out.reduced;
  std::size_t row = 0;
  for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
    std::size_t piv = row;
    while (piv < a.rows() && a(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    if (piv != row) {
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(piv, j), a(row, j));
    }
    const FieldElem inv = a(row, col).inverse();
    for (std::size_t j = col; j < a.cols(); ++j) a(row, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == row || a(i, col).is_zero()) continue;
      const FieldElem f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) {
        if (!a(row, j).is_zero()) a(i, j) -= f * a(row, j);
      }
    }
    out.pivots.push_back(col);
    ++row;
  }
  return out;
}

std::size_t rank(const Matrix& m) { return row_reduce(m).pivots.size(); }

Matrix kernel(const Matrix& m) {
  const auto ech = row_reduce(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : ech.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < m.cols(); ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  Matrix k(m.spec(), m.cols(), free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    k(free_cols[f], f) = FieldElem(m.spec(), 1L);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r) {
      k(ech.pivots[r], f) = -ech.reduced(r, free_cols[f]);
    }
  }
  return k;
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  const auto ech = row_reduce(hstack(m, Matrix::identity(m.spec(), n)));
  if (ech.pivots.size() < n || ech.pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
  Matrix inv(m.spec(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = ech.reduced(i, n + j);
  return inv;
}

FieldElem determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  Matrix a = m;
  const std::size_t n = a.rows();
  FieldElem det(m.spec(), 1L);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a(piv, col).is_zero()) ++piv;
    if (piv == n) return FieldElem(m.spec());
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    const FieldElem inv = a(col, col).inverse();
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a(i, col).is_zero()) continue;
      const FieldElem f = a(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
    }
  }
  return det;
}

bool in_column_span(const Matrix& basis, const std::vector<FieldElem>& v) {
  if (v.size() != basis.rows()) throw DomainError("vector length does not match basis");
  Matrix col(basis.spec(), v.size(), 1);
  for (std::size_t i = 0; i < v.size(); ++i) col(i, 0) = v[i];
  return rank(hstack(basis, col)) == rank(basis);
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DomainError("hstack row mismatch");
  Matrix c(a.spec(), a.rows(), a.cols() + b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j);
    for (std::size_t j = 0; j < b.cols(); ++j) c(i, a.cols() + j) = b(i, j);
  }
  return c;
}

}  // namespace weyl
