#pragma once

#include "rnc/binary_form.hpp"
#include "rnc/matrix.hpp"
#include "rnc/subspace.hpp"

namespace rnc {

// Element of S^kU (x) S^dU as a (k+1) x (d+1) coefficient grid: entry (i,j) is
// the coefficient of x^{k-i} y^i (x) x^{d-j} y^j.
class Tensor2 {
 public:
  Tensor2(int k, int d) : k_(check(k)), d_(check(d)), grid_(k + 1, d + 1) {}

  static Tensor2 simple(const BinaryForm& a, const BinaryForm& b);

  int left_degree() const { return k_; }
  int right_degree() const { return d_; }

  Scalar& at(int i, int j) { return grid_.at(i, j); }
  const Scalar& at(int i, int j) const { return grid_.at(i, j); }
  const Matrix& grid() const { return grid_; }

  bool is_zero() const { return grid_.is_zero(); }

  friend bool operator==(const Tensor2& a, const Tensor2& b) = default;

  Tensor2& operator+=(const Tensor2& o);
  Tensor2& operator*=(const Scalar& s);

 private:
  static int check(int n) {
    require_input(n >= 0, "negative tensor degree");
    return n;
  }
  int k_, d_;
  Matrix grid_;
};

// Row-major flattening (i,j) -> i*(d+1)+j, the basis order used by all the
// operator matrices below.
Vec flatten(const Tensor2& t);
Tensor2 unflatten(int k, int d, const Vec& v);

// Polarization p_k: S^{d+k}U -> S^kU (x) S^dU, normalized so mult_map(polarize(f,k)) = f
// and polarize(l^{d+k}, k) = l^k (x) l^d.
Tensor2 polarize(const BinaryForm& f, int k);

// Multiplication by xi = x(x)y - y(x)x.
Tensor2 xi_mul(const Tensor2& t);

// First transvectant D = d/dx (x) d/dy - d/dy (x) d/dx; needs k,d >= 1.
Tensor2 transvect_D(const Tensor2& t);

// D applied twice; needs k,d >= 2.
Tensor2 transvect_D2(const Tensor2& t);

// Total multiplication of the two slots.
BinaryForm mult_map(const Tensor2& t);

// psi_k(x (x) f0 + y (x) f1) for f0,f1 of degree d+k-1: polarize each slot to
// S^kU (x) S^{d-1}U and multiply the outer variable into the right slot.
// Injective with image ker D^2; needs k >= 1, d >= 2.
Tensor2 psi_k(const BinaryForm& f0, const BinaryForm& f1, int k);

// Operator matrices in the flattened monomial bases.
Matrix matrix_of_D(int k, int d);    // (k*d) x (k+1)(d+1)
Matrix matrix_of_D2(int k, int d);   // (k-1)(d-1) x (k+1)(d+1)
Matrix matrix_of_polarize(int k, int d);  // (k+1)(d+1) x (d+k+1)
Matrix matrix_of_psi(int k, int d);       // (k+1)(d+1) x 2(d+k)

// Matrix of m : U (x) S^{d-1}U -> S^dU, columns x(x)m_0..x(x)m_{d-1}, then y(x)m_j.
Matrix mult_matrix(int d);

}  // namespace rnc
