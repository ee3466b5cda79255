#pragma once

#include "rnc/matrix.hpp"

namespace rnc {

// Linear subspace of Q^n, stored as its canonical basis: the reduced
// row-echelon form of any spanning set, zero rows dropped. Two subspaces are
// equal iff their canonical bases are equal, so operator== decides subspace
// equality.
class LinSubspace {
 public:
  LinSubspace() = default;

  static LinSubspace zero(std::size_t ambient);
  static LinSubspace full(std::size_t ambient);
  // ambient = rows.cols(); reduces the rows to canonical form.
  static LinSubspace span_rows(const Matrix& rows);
  static LinSubspace span(std::size_t ambient, const std::vector<Vec>& vecs);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  // dim() x ambient_dim(), reduced echelon, no zero rows.
  const Matrix& basis() const { return basis_; }

  bool contains(const Vec& v) const;
  bool contains(const LinSubspace& other) const;

  friend bool operator==(const LinSubspace& a, const LinSubspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  Matrix basis_;
};

// Right null space {v : m v = 0}; ambient = m.cols().
LinSubspace kernel(const Matrix& m);

LinSubspace sum(const LinSubspace& a, const LinSubspace& b);
LinSubspace intersect(const LinSubspace& a, const LinSubspace& b);

// {v : m v in s}; requires s.ambient_dim() == m.rows(); ambient = m.cols().
LinSubspace preimage(const Matrix& m, const LinSubspace& s);

// Orthogonal complement under the standard dot product, i.e. kernel of the
// basis matrix. (Dual-pairing annihilators with weights live with the forms.)
LinSubspace dot_complement(const LinSubspace& s);

}  // namespace rnc
