#pragma once

#include <string>
#include <vector>

#include "rnc/error.hpp"
#include "rnc/matrix.hpp"
#include "rnc/rational.hpp"

namespace rnc {

// Homogeneous form of degree n in two variables, coefficient of V0^{n-i} V1^i
// at index i, no binomial weights. The zero form of any degree is representable.
// BinaryForm lives in the (x,y) variables, DualForm in the dual pair (u,v);
// keeping them as distinct types prevents mixing a space with its dual.
template <char V0, char V1>
class FormT {
 public:
  static constexpr char var0 = V0;
  static constexpr char var1 = V1;

  FormT() : coeffs_(1, Scalar(0)) {}
  explicit FormT(int degree) : coeffs_(check_deg(degree) + 1, Scalar(0)) {}
  FormT(int degree, Vec coeffs) : coeffs_(std::move(coeffs)) {
    require_input(static_cast<int>(coeffs_.size()) == check_deg(degree) + 1,
                  "form coefficient count does not match degree");
  }

  static FormT monomial(int degree, int v1_exp, const Scalar& c = Scalar(1)) {
    require_input(0 <= v1_exp && v1_exp <= degree, "monomial exponent out of range");
    FormT f(degree);
    f.coeffs_[v1_exp] = c;
    return f;
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Vec& coeffs() const { return coeffs_; }
  const Scalar& coeff(int i) const { return coeffs_[i]; }
  Scalar& coeff(int i) { return coeffs_[i]; }

  bool is_zero() const {
    for (const Scalar& c : coeffs_)
      if (c != 0) return false;
    return true;
  }

  friend bool operator==(const FormT& a, const FormT& b) = default;

 private:
  static int check_deg(int degree) {
    require_input(degree >= 0, "negative form degree");
    return degree;
  }
  Vec coeffs_;
};

using BinaryForm = FormT<'x', 'y'>;
using DualForm = FormT<'u', 'v'>;

namespace detail {
Scalar falling(int n, int r);  // n (n-1) ... (n-r+1), exact; 1 when r = 0
}

template <char V0, char V1>
FormT<V0, V1> operator+(const FormT<V0, V1>& a, const FormT<V0, V1>& b) {
  require_input(a.degree() == b.degree(), "form degree mismatch in +");
  FormT<V0, V1> r = a;
  for (int i = 0; i <= r.degree(); ++i) r.coeff(i) += b.coeff(i);
  return r;
}

template <char V0, char V1>
FormT<V0, V1> operator-(const FormT<V0, V1>& a, const FormT<V0, V1>& b) {
  require_input(a.degree() == b.degree(), "form degree mismatch in -");
  FormT<V0, V1> r = a;
  for (int i = 0; i <= r.degree(); ++i) r.coeff(i) -= b.coeff(i);
  return r;
}

template <char V0, char V1>
FormT<V0, V1> operator*(const Scalar& s, const FormT<V0, V1>& f) {
  FormT<V0, V1> r = f;
  for (int i = 0; i <= r.degree(); ++i) r.coeff(i) *= s;
  return r;
}

// Formal partial derivative; var is 0 for V0, 1 for V1. Degree must be >= 1.
template <char V0, char V1>
FormT<V0, V1> derivative(const FormT<V0, V1>& f, int var) {
  const int n = f.degree();
  require_input(n >= 1, "derivative of a degree-0 form");
  FormT<V0, V1> r(n - 1);
  for (int i = 0; i < n; ++i)
    r.coeff(i) = (var == 0) ? Scalar(n - i) * f.coeff(i) : Scalar(i + 1) * f.coeff(i + 1);
  return r;
}

template <char V0, char V1>
FormT<V0, V1> multiply(const FormT<V0, V1>& f, const FormT<V0, V1>& g) {
  FormT<V0, V1> r(f.degree() + g.degree());
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coeff(i) == 0) continue;
    for (int j = 0; j <= g.degree(); ++j) r.coeff(i + j) += f.coeff(i) * g.coeff(j);
  }
  return r;
}

// (a V0 + b V1)^n
template <char V0, char V1>
FormT<V0, V1> linear_power(const Scalar& a, const Scalar& b, int n) {
  FormT<V0, V1> r(n);
  Scalar pa(1);
  std::vector<Scalar> apow(n + 1), bpow(n + 1);
  apow[0] = bpow[0] = 1;
  for (int i = 1; i <= n; ++i) {
    apow[i] = apow[i - 1] * a;
    bpow[i] = bpow[i - 1] * b;
  }
  for (int i = 0; i <= n; ++i)
    r.coeff(i) = Scalar(binomial(n, i)) * apow[n - i] * bpow[i];
  return r;
}

template <char V0, char V1>
Scalar evaluate(const FormT<V0, V1>& f, const Scalar& a, const Scalar& b) {
  const int n = f.degree();
  Scalar acc(0), bpow(1);
  std::vector<Scalar> apow(n + 1);
  apow[0] = 1;
  for (int i = 1; i <= n; ++i) apow[i] = apow[i - 1] * a;
  for (int i = 0; i <= n; ++i) {
    if (f.coeff(i) != 0) acc += f.coeff(i) * apow[n - i] * bpow;
    bpow *= b;
  }
  return acc;
}

// Apolar action: op of degree k acts on g of degree b >= k as the constant
// coefficient differential operator with op's first variable mapped to d/dV0
// and its second to d/dV1 of the target pair.
template <char A0, char A1, char B0, char B1>
FormT<B0, B1> apolar_apply(const FormT<A0, A1>& op, const FormT<B0, B1>& g) {
  const int k = op.degree(), b = g.degree();
  require_input(k <= b, "apolar operator degree exceeds target degree");
  FormT<B0, B1> r(b - k);
  for (int t = 0; t <= b - k; ++t) {
    Scalar acc(0);
    for (int i = 0; i <= k; ++i) {
      if (op.coeff(i) == 0 || g.coeff(t + i) == 0) continue;
      acc += op.coeff(i) * detail::falling(b - t - i, k - i) * detail::falling(t + i, i) *
             g.coeff(t + i);
    }
    r.coeff(t) = acc;
  }
  return r;
}

// Full contraction of equal-degree forms; diagonal Gram matrix i!(d-i)! in the
// monomial bases.
template <char A0, char A1, char B0, char B1>
Scalar pairing(const FormT<A0, A1>& f, const FormT<B0, B1>& g) {
  const int d = f.degree();
  require_input(d == g.degree(), "pairing degree mismatch");
  Scalar acc(0);
  for (int i = 0; i <= d; ++i)
    if (f.coeff(i) != 0 && g.coeff(i) != 0)
      acc += f.coeff(i) * g.coeff(i) * Scalar(factorial(i) * factorial(d - i));
  return acc;
}

// Matrix of the contraction map sending a degree-k dual monomial to its action
// on g: columns indexed by A1-exponent j of the operator, rows by the target
// monomial index. Its image is the span of the k-th order derivatives of g and
// its rank is basis independent.
template <char V0, char V1>
Matrix catalecticant(const FormT<V0, V1>& g, int k) {
  const int n = g.degree();
  require_input(0 <= k && k <= n, "catalecticant index out of range");
  Matrix m(n - k + 1, k + 1);
  for (int t = 0; t <= n - k; ++t)
    for (int j = 0; j <= k; ++j)
      if (g.coeff(t + j) != 0)
        m.at(t, j) =
            detail::falling(n - t - j, k - j) * detail::falling(t + j, j) * g.coeff(t + j);
  return m;
}

template <char V0, char V1>
std::size_t cat_rank(const FormT<V0, V1>& g, int k) {
  return rank(catalecticant(g, k));
}

template <char V0, char V1>
std::size_t middle_cat_rank(const FormT<V0, V1>& g) {
  return cat_rank(g, g.degree() / 2);
}

// Monic gcd of two forms, defined up to the stated normalization: the first
// nonzero coefficient (highest V0 power) is 1. Strips the common V1 power,
// dehomogenizes at V1 = 1, runs Euclid over Q[t], rehomogenizes.
template <char V0, char V1>
FormT<V0, V1> gcd(const FormT<V0, V1>& f, const FormT<V0, V1>& g);

// Sylvester resultant with the homogeneous convention: zero iff the two forms
// share a projective root. Both degrees must be >= 1.
template <char V0, char V1>
Scalar resultant(const FormT<V0, V1>& f, const FormT<V0, V1>& g);

// Tiny expression grammar:
//   form := term (("+"|"-") term)*
//   term := [coef "*"] mono | coef
//   coef := integer | integer "/" integer
//   mono := (V0 ["^" int])? ("*")? (V1 ["^" int])?   (at least one variable)
// Every monomial must have total degree equal to `degree`; a bare coefficient
// is only accepted at degree 0.
template <class Form>
Form parse_form(const std::string& text, int degree);

template <char V0, char V1>
std::string form_str(const FormT<V0, V1>& f);

// --- implementation of gcd / resultant / parse / print ---

namespace detail {

// Univariate polynomials as dense coefficient vectors, index = power of t,
// trailing (high) zeros trimmed. Helpers for the homogeneous gcd.
using UniPoly = std::vector<Scalar>;

UniPoly uni_trim(UniPoly p);
UniPoly uni_rem(UniPoly a, const UniPoly& b);
UniPoly uni_gcd_monic(UniPoly a, UniPoly b);

struct ParsedTerm {
  Scalar coeff;
  int e0 = 0, e1 = 0;
  bool has_var = false;
};

// Tokenizes and parses against the grammar above with variable letters v0/v1.
std::vector<ParsedTerm> parse_terms(const std::string& text, char v0, char v1);

std::string monomial_str(const Scalar& c, int e0, int e1, char v0, char v1, bool first);

}  // namespace detail

template <char V0, char V1>
FormT<V0, V1> gcd(const FormT<V0, V1>& f, const FormT<V0, V1>& g) {
  require_input(!(f.is_zero() && g.is_zero()), "gcd of two zero forms");
  auto monic = [](const FormT<V0, V1>& h) {
    for (int i = 0; i <= h.degree(); ++i)
      if (h.coeff(i) != 0) return frac(1, 1) / h.coeff(i) * h;
    return h;
  };
  if (f.is_zero()) return monic(g);
  if (g.is_zero()) return monic(f);

  auto ord_v1 = [](const FormT<V0, V1>& h) {
    int i = 0;
    while (h.coeff(i) == 0) ++i;
    return i;
  };
  const int af = ord_v1(f), ag = ord_v1(g);
  const int common = std::min(af, ag);

  // After stripping V1^a the dehomogenized polynomial has full degree.
  auto dehom = [](const FormT<V0, V1>& h, int a) {
    detail::UniPoly p(h.degree() - a + 1);
    for (int i = a; i <= h.degree(); ++i) p[h.degree() - i] = h.coeff(i);
    return p;
  };
  detail::UniPoly u = detail::uni_gcd_monic(dehom(f, af), dehom(g, ag));
  const int du = static_cast<int>(u.size()) - 1;
  FormT<V0, V1> r(du + common);
  for (int rr = 0; rr <= du; ++rr) r.coeff(du - rr + common) = u[rr];
  return r;
}

template <char V0, char V1>
Scalar resultant(const FormT<V0, V1>& f, const FormT<V0, V1>& g) {
  const int m = f.degree(), n = g.degree();
  require_input(m >= 1 && n >= 1, "resultant needs positive degrees");
  Matrix s(m + n, m + n);
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s.at(r, r + i) = f.coeff(i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s.at(n + r, r + i) = g.coeff(i);
  return det(s);
}

template <class Form>
Form parse_form(const std::string& text, int degree) {
  require_input(degree >= 0, "negative degree");
  auto terms = detail::parse_terms(text, Form::var0, Form::var1);
  Form f(degree);
  for (const auto& t : terms) {
    if (!t.has_var) {
      require_input(degree == 0, "bare coefficient in a positive-degree form");
      f.coeff(0) += t.coeff;
      continue;
    }
    require_input(t.e0 + t.e1 == degree,
                  "monomial of degree " + std::to_string(t.e0 + t.e1) +
                      " in a form of degree " + std::to_string(degree));
    f.coeff(t.e1) += t.coeff;
  }
  return f;
}

template <char V0, char V1>
std::string form_str(const FormT<V0, V1>& f) {
  std::string out;
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coeff(i) == 0) continue;
    out += detail::monomial_str(f.coeff(i), f.degree() - i, i, V0, V1, out.empty());
  }
  return out.empty() ? "0" : out;
}

}  // namespace rnc
