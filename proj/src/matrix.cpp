#include "rnc/matrix.hpp"

#include "rnc/error.hpp"

namespace rnc {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    require_internal(rows[i].size() == cols, "from_rows: ragged row");
    for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = rows[i][j];
  }
  return m;
}

Vec Matrix::row(std::size_t i) const {
  return Vec(a_.begin() + i * cols_, a_.begin() + (i + 1) * cols_);
}

bool Matrix::row_is_zero(std::size_t i) const {
  for (std::size_t j = 0; j < cols_; ++j)
    if (at(i, j) != 0) return false;
  return true;
}

bool Matrix::is_zero() const {
  for (const Scalar& x : a_)
    if (x != 0) return false;
  return true;
}

Matrix rref(const Matrix& m) {
  Matrix r = m;
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < r.cols() && pivot_row < r.rows(); ++col) {
    std::size_t sel = pivot_row;
    while (sel < r.rows() && r.at(sel, col) == 0) ++sel;
    if (sel == r.rows()) continue;
    if (sel != pivot_row)
      for (std::size_t j = 0; j < r.cols(); ++j)
        std::swap(r.at(sel, j), r.at(pivot_row, j));
    Scalar inv = 1 / r.at(pivot_row, col);
    for (std::size_t j = col; j < r.cols(); ++j) r.at(pivot_row, j) *= inv;
    for (std::size_t i = 0; i < r.rows(); ++i) {
      if (i == pivot_row || r.at(i, col) == 0) continue;
      Scalar f = r.at(i, col);
      for (std::size_t j = col; j < r.cols(); ++j)
        r.at(i, j) -= f * r.at(pivot_row, j);
    }
    ++pivot_row;
  }
  return r;
}

std::size_t rank(const Matrix& m) {
  Matrix r = rref(m);
  std::size_t k = 0;
  while (k < r.rows() && !r.row_is_zero(k)) ++k;
  return k;
}

Matrix transpose(const Matrix& m) {
  Matrix t(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) t.at(j, i) = m.at(i, j);
  return t;
}

Matrix mat_mul(const Matrix& a, const Matrix& b) {
  require_internal(a.cols() == b.rows(), "mat_mul: shape mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a.at(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        c.at(i, j) += a.at(i, k) * b.at(k, j);
    }
  return c;
}

Vec mat_vec(const Matrix& m, const Vec& v) {
  require_internal(v.size() == m.cols(), "mat_vec: shape mismatch");
  Vec r(m.rows(), Scalar(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) r[i] += m.at(i, j) * v[j];
  return r;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  require_internal(a.cols() == b.cols(), "vstack: column mismatch");
  Matrix c(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c.at(i, j) = a.at(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) c.at(a.rows() + i, j) = b.at(i, j);
  return c;
}

namespace {

// Bareiss fraction-free elimination; much faster than rational pivoting when
// the entries are integers.
Scalar det_bareiss_int(const Matrix& m) {
  const std::size_t n = m.rows();
  std::vector<Int> a(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m.at(i, j).get_num();
  Int prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k * n + k] == 0) {
      std::size_t sel = k + 1;
      while (sel < n && a[sel * n + k] == 0) ++sel;
      if (sel == n) return Scalar(0);
      for (std::size_t j = 0; j < n; ++j) std::swap(a[k * n + j], a[sel * n + j]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a[i * n + j] * a[k * n + k] - a[i * n + k] * a[k * n + j];
        mpz_divexact(a[i * n + j].get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k * n + k];
  }
  return Scalar(sign * a[n * n - 1]);
}

}  // namespace

Scalar det(const Matrix& m) {
  require_input(m.rows() == m.cols(), "det: matrix not square");
  if (m.rows() == 0) return Scalar(1);
  bool integral = true;
  for (std::size_t i = 0; i < m.rows() && integral; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j).get_den() != 1) {
        integral = false;
        break;
      }
  if (integral) return det_bareiss_int(m);
  Matrix r = m;
  const std::size_t n = r.rows();
  Scalar d(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = col;
    while (sel < n && r.at(sel, col) == 0) ++sel;
    if (sel == n) return Scalar(0);
    if (sel != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(r.at(sel, j), r.at(col, j));
      d = -d;
    }
    d *= r.at(col, col);
    Scalar inv = 1 / r.at(col, col);
    for (std::size_t i = col + 1; i < n; ++i) {
      if (r.at(i, col) == 0) continue;
      Scalar f = r.at(i, col) * inv;
      for (std::size_t j = col; j < n; ++j) r.at(i, j) -= f * r.at(col, j);
    }
  }
  return d;
}

}  // namespace rnc
