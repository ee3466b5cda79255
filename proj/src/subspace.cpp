#include "rnc/subspace.hpp"

#include "rnc/error.hpp"

namespace rnc {

namespace {

Matrix strip_zero_rows(const Matrix& r) {
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < r.rows(); ++i)
    if (!r.row_is_zero(i)) rows.push_back(r.row(i));
  return Matrix::from_rows(rows, r.cols());
}

}  // namespace

LinSubspace LinSubspace::zero(std::size_t ambient) {
  LinSubspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix(0, ambient);
  return s;
}

LinSubspace LinSubspace::full(std::size_t ambient) {
  LinSubspace s;
  s.ambient_ = ambient;
  s.basis_ = Matrix::identity(ambient);
  return s;
}

LinSubspace LinSubspace::span_rows(const Matrix& rows) {
  LinSubspace s;
  s.ambient_ = rows.cols();
  s.basis_ = strip_zero_rows(rref(rows));
  return s;
}

LinSubspace LinSubspace::span(std::size_t ambient, const std::vector<Vec>& vecs) {
  return span_rows(Matrix::from_rows(vecs, ambient));
}

bool LinSubspace::contains(const Vec& v) const {
  require_input(v.size() == ambient_, "contains: ambient mismatch");
  // Reduce v against the echelon basis; membership iff the residue is zero.
  Vec r = v;
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    std::size_t p = 0;
    while (p < ambient_ && basis_.at(i, p) == 0) ++p;
    if (p == ambient_ || r[p] == 0) continue;
    Scalar f = r[p];  // pivot entry is 1
    for (std::size_t j = p; j < ambient_; ++j) r[j] -= f * basis_.at(i, j);
  }
  for (const Scalar& x : r)
    if (x != 0) return false;
  return true;
}

bool LinSubspace::contains(const LinSubspace& other) const {
  require_input(other.ambient_ == ambient_, "contains: ambient mismatch");
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

LinSubspace kernel(const Matrix& m) {
  const std::size_t n = m.cols();
  Matrix r = rref(m);
  // pivot_col[i] for each nonzero row
  std::vector<std::size_t> pivot_cols;
  std::vector<bool> is_pivot(n, false);
  for (std::size_t i = 0; i < r.rows(); ++i) {
    std::size_t p = 0;
    while (p < n && r.at(i, p) == 0) ++p;
    if (p == n) break;
    pivot_cols.push_back(p);
    is_pivot[p] = true;
  }
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < n; ++j) {
    if (is_pivot[j]) continue;
    Vec v(n, Scalar(0));
    v[j] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i)
      v[pivot_cols[i]] = -r.at(i, j);
    basis.push_back(v);
  }
  return LinSubspace::span(n, basis);
}

LinSubspace sum(const LinSubspace& a, const LinSubspace& b) {
  require_input(a.ambient_dim() == b.ambient_dim(), "sum: ambient mismatch");
  return LinSubspace::span_rows(vstack(a.basis(), b.basis()));
}

LinSubspace intersect(const LinSubspace& a, const LinSubspace& b) {
  require_input(a.ambient_dim() == b.ambient_dim(), "intersect: ambient mismatch");
  // v in a∩b iff v ⊥ (a° + b°) where ° is the dot-complement.
  LinSubspace joint = sum(dot_complement(a), dot_complement(b));
  if (joint.dim() == 0) return LinSubspace::full(a.ambient_dim());
  return kernel(joint.basis());
}

LinSubspace preimage(const Matrix& m, const LinSubspace& s) {
  require_input(s.ambient_dim() == m.rows(), "preimage: ambient/rows mismatch");
  // m v in s iff (A m) v = 0 for A the dot-complement basis of s.
  LinSubspace ann = dot_complement(s);
  if (ann.dim() == 0) return LinSubspace::full(m.cols());
  return kernel(mat_mul(ann.basis(), m));
}

LinSubspace dot_complement(const LinSubspace& s) {
  if (s.dim() == 0) return LinSubspace::full(s.ambient_dim());
  return kernel(s.basis());
}

}  // namespace rnc
