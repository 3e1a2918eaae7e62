#pragma once

// Dense matrices over the coefficient field with exact Gaussian elimination.

#include <cstddef>
#include <string>
#include <vector>

#include "weyl/coeffield.hpp"

namespace weyl {

class Matrix {
 public:
  Matrix(FieldSpec spec, std::size_t rows, std::size_t cols);

  static Matrix identity(FieldSpec spec, std::size_t n);
  /// Row-major construction; throws on ragged input.
  static Matrix from_rows(FieldSpec spec, const std::vector<std::vector<FieldElem>>& rows);

  const FieldSpec& spec() const { return spec_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  const FieldElem& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  FieldElem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  Matrix transposed() const;
  std::vector<FieldElem> column(std::size_t c) const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const FieldElem& s, Matrix m);
  friend bool operator==(const Matrix&, const Matrix&) = default;

  bool is_zero() const;

 private:
  FieldSpec spec_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElem> data_;
};

struct RowEchelon {
  Matrix reduced;                    // reduced row echelon form
  std::vector<std::size_t> pivots;   // pivot column per nonzero row
};

RowEchelon row_reduce(Matrix m);
std::size_t rank(const Matrix& m);
/// Columns form a basis of {v : m v = 0}.
Matrix kernel(const Matrix& m);
/// Throws DomainError when singular.
Matrix inverse(const Matrix& m);
FieldElem determinant(const Matrix& m);
/// Columns of `basis` (assumed independent) span a subspace; tests membership of v.
bool in_column_span(const Matrix& basis, const std::vector<FieldElem>& v);
/// Horizontal concatenation.
Matrix hstack(const Matrix& a, const Matrix& b);

}  // namespace weyl
