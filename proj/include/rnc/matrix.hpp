#pragma once

#include <cstddef>
#include <vector>

#include "rnc/rational.hpp"

namespace rnc {

using Vec = std::vector<Scalar>;

// Dense matrix over Q. Row-major, value semantics, immutable in spirit: every
// algorithm below returns a fresh matrix. Desk-scale sizes only (a few hundred
// rows/cols), so no sparse storage.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vec>& rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  Vec row(std::size_t i) const;
  bool row_is_zero(std::size_t i) const;
  bool is_zero() const;

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Vec a_;
};

// Canonical reduced row-echelon form (pivots 1, pivot columns cleared).
// Deterministic: equal inputs give identical output.
Matrix rref(const Matrix& m);

std::size_t rank(const Matrix& m);

Matrix transpose(const Matrix& m);
Matrix mat_mul(const Matrix& a, const Matrix& b);
Vec mat_vec(const Matrix& m, const Vec& v);

// Stacks b below a; column counts must agree.
Matrix vstack(const Matrix& a, const Matrix& b);

Scalar det(const Matrix& m);

}  // namespace rnc
