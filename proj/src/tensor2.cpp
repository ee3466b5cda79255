#include "rnc/tensor2.hpp"

namespace rnc {

Tensor2 Tensor2::simple(const BinaryForm& a, const BinaryForm& b) {
  Tensor2 t(a.degree(), b.degree());
  for (int i = 0; i <= a.degree(); ++i) {
    if (a.coeff(i) == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) t.at(i, j) = a.coeff(i) * b.coeff(j);
  }
  return t;
}

Tensor2& Tensor2::operator+=(const Tensor2& o) {
  require_input(k_ == o.k_ && d_ == o.d_, "tensor shape mismatch");
  for (int i = 0; i <= k_; ++i)
    for (int j = 0; j <= d_; ++j) at(i, j) += o.at(i, j);
  return *this;
}

Tensor2& Tensor2::operator*=(const Scalar& s) {
  for (int i = 0; i <= k_; ++i)
    for (int j = 0; j <= d_; ++j) at(i, j) *= s;
  return *this;
}

Vec flatten(const Tensor2& t) {
  const int k = t.left_degree(), d = t.right_degree();
  Vec v;
  v.reserve((k + 1) * (d + 1));
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= d; ++j) v.push_back(t.at(i, j));
  return v;
}

Tensor2 unflatten(int k, int d, const Vec& v) {
  require_input(static_cast<int>(v.size()) == (k + 1) * (d + 1), "unflatten size mismatch");
  Tensor2 t(k, d);
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= d; ++j) t.at(i, j) = v[i * (d + 1) + j];
  return t;
}

Tensor2 polarize(const BinaryForm& f, int k) {
  const int n = f.degree();
  require_input(k >= 0 && n >= k, "polarize: degree smaller than k");
  const int d = n - k;
  // prefactor (n-k)!/n! times binom(k,i) x^{k-i} y^i (x) d_x^{k-i} d_y^i f
  Scalar pre = frac(factorial(d), factorial(n));
  Tensor2 t(k, d);
  for (int i = 0; i <= k; ++i) {
    // d_x^{k-i} d_y^i f, coefficients directly
    Scalar w = pre * Scalar(binomial(k, i));
    for (int j = 0; j <= d; ++j) {
      // coefficient of x^{d-j} y^j in the iterated derivative comes from f's
      // monomial x^{n-(j+i)} y^{j+i}
      const Scalar& c = f.coeff(j + i);
      if (c == 0) continue;
      t.at(i, j) = w * detail::falling(n - j - i, k - i) * detail::falling(j + i, i) * c;
    }
  }
  return t;
}

Tensor2 xi_mul(const Tensor2& t) {
  const int k = t.left_degree() + 1, d = t.right_degree() + 1;
  Tensor2 r(k, d);
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= d; ++j) {
      Scalar acc(0);
      if (j >= 1 && i <= k - 1 && j - 1 <= d - 1) acc += t.at(i, j - 1);
      if (i >= 1 && i - 1 <= k - 1 && j <= d - 1) acc -= t.at(i - 1, j);
      r.at(i, j) = acc;
    }
  return r;
}

Tensor2 transvect_D(const Tensor2& t) {
  const int k = t.left_degree(), d = t.right_degree();
  require_input(k >= 1 && d >= 1, "transvect_D needs both degrees >= 1");
  Tensor2 r(k - 1, d - 1);
  for (int i = 0; i <= k - 1; ++i)
    for (int j = 0; j <= d - 1; ++j)
      r.at(i, j) = Scalar(k - i) * Scalar(j + 1) * t.at(i, j + 1) -
                   Scalar(i + 1) * Scalar(d - j) * t.at(i + 1, j);
  return r;
}

Tensor2 transvect_D2(const Tensor2& t) {
  require_input(t.left_degree() >= 2 && t.right_degree() >= 2,
                "transvect_D2 needs both degrees >= 2");
  return transvect_D(transvect_D(t));
}

BinaryForm mult_map(const Tensor2& t) {
  const int k = t.left_degree(), d = t.right_degree();
  BinaryForm f(k + d);
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= d; ++j)
      if (t.at(i, j) != 0) f.coeff(i + j) += t.at(i, j);
  return f;
}

Tensor2 psi_k(const BinaryForm& f0, const BinaryForm& f1, int k) {
  require_input(f0.degree() == f1.degree(), "psi_k: component degree mismatch");
  const int d = f0.degree() - k + 1;
  require_input(k >= 1 && d >= 2, "psi_k needs k >= 1 and d >= 2");
  Tensor2 p0 = polarize(f0, k), p1 = polarize(f1, k);  // in S^kU (x) S^{d-1}U
  Tensor2 r(k, d);
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= d - 1; ++j) {
      if (p0.at(i, j) != 0) r.at(i, j) += p0.at(i, j);      // multiply x into slot 2
      if (p1.at(i, j) != 0) r.at(i, j + 1) += p1.at(i, j);  // multiply y into slot 2
    }
  return r;
}

namespace {

// Columns are images of the flattened basis tensors under `op`.
template <class Op>
Matrix operator_matrix(int k, int d, int out_k, int out_d, Op&& op) {
  Matrix m((out_k + 1) * (out_d + 1), (k + 1) * (d + 1));
  for (int i = 0; i <= k; ++i)
    for (int j = 0; j <= d; ++j) {
      Tensor2 basis(k, d);
      basis.at(i, j) = 1;
      Vec img = flatten(op(basis));
      const std::size_t col = i * (d + 1) + j;
      for (std::size_t r = 0; r < img.size(); ++r) m.at(r, col) = img[r];
    }
  return m;
}

}  // namespace

Matrix matrix_of_D(int k, int d) {
  return operator_matrix(k, d, k - 1, d - 1, [](const Tensor2& t) { return transvect_D(t); });
}

Matrix matrix_of_D2(int k, int d) {
  return operator_matrix(k, d, k - 2, d - 2, [](const Tensor2& t) { return transvect_D2(t); });
}

Matrix matrix_of_polarize(int k, int d) {
  const int n = d + k;
  Matrix m((k + 1) * (d + 1), n + 1);
  for (int c = 0; c <= n; ++c) {
    Vec img = flatten(polarize(BinaryForm::monomial(n, c), k));
    for (std::size_t r = 0; r < img.size(); ++r) m.at(r, c) = img[r];
  }
  return m;
}

Matrix matrix_of_psi(int k, int d) {
  const int n = d + k - 1;
  Matrix m((k + 1) * (d + 1), 2 * (n + 1));
  const BinaryForm zero(n);
  for (int c = 0; c <= n; ++c) {
    Vec img0 = flatten(psi_k(BinaryForm::monomial(n, c), zero, k));
    Vec img1 = flatten(psi_k(zero, BinaryForm::monomial(n, c), k));
    for (std::size_t r = 0; r < img0.size(); ++r) {
      m.at(r, c) = img0[r];
      m.at(r, n + 1 + c) = img1[r];
    }
  }
  return m;
}

Matrix mult_matrix(int d) {
  Matrix m(d + 1, 2 * d);
  for (int j = 0; j < d; ++j) {
    m.at(j, j) = 1;          // x * x^{d-1-j} y^j
    m.at(j + 1, d + j) = 1;  // y * x^{d-1-j} y^j
  }
  return m;
}

}  // namespace rnc
