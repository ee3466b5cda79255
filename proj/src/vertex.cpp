#include "rnc/vertex.hpp"

#include <random>

namespace rnc {

namespace {

Matrix derivative_matrix(int d, int var) {
  // d/dx or d/dy as a map S^dU -> S^{d-1}U in the coefficient bases
  Matrix m(d, d + 1);
  for (int i = 0; i < d; ++i) {
    if (var == 0)
      m.at(i, i) = d - i;
    else
      m.at(i, i + 1) = i + 1;
  }
  return m;
}

// Pairing weights i!(d-i)! as a diagonal matrix.
Matrix pairing_weights(int d) {
  Matrix w(d + 1, d + 1);
  for (int i = 0; i <= d; ++i) w.at(i, i) = Scalar(factorial(i) * factorial(d - i));
  return w;
}

}  // namespace

std::string NumericalType::str() const {
  std::string s = "(";
  if (a >= 0) s += "a=" + std::to_string(a) + "; ";
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(b[i]);
  }
  return s + ")";
}

Vertex make_vertex(int d, const std::vector<BinaryForm>& gens) {
  require_input(d >= 0, "negative degree");
  std::vector<Vec> rows;
  for (const BinaryForm& f : gens) {
    require_input(f.degree() == d, "generator degree mismatch");
    rows.push_back(f.coeffs());
  }
  return Vertex{d, LinSubspace::span(d + 1, rows)};
}

std::vector<BinaryForm> basis_forms(const Vertex& v) {
  std::vector<BinaryForm> out;
  for (std::size_t i = 0; i < v.space.dim(); ++i)
    out.emplace_back(v.d, v.space.basis().row(i));
  return out;
}

Vertex partial(const Vertex& v) {
  require_input(v.d >= 1, "partial of degree-0 space");
  std::vector<Vec> rows;
  Matrix dx = derivative_matrix(v.d, 0), dy = derivative_matrix(v.d, 1);
  for (std::size_t i = 0; i < v.space.dim(); ++i) {
    Vec r = v.space.basis().row(i);
    rows.push_back(mat_vec(dx, r));
    rows.push_back(mat_vec(dy, r));
  }
  return Vertex{v.d - 1, LinSubspace::span(v.d, rows)};
}

Vertex partial_inverse(const Vertex& v) {
  Matrix dx = derivative_matrix(v.d + 1, 0), dy = derivative_matrix(v.d + 1, 1);
  LinSubspace s = intersect(preimage(dx, v.space), preimage(dy, v.space));
  return Vertex{v.d + 1, s};
}

Vertex partial_span(const BinaryForm& g, int b) {
  if (b == -1) return Vertex{g.degree() + 1, LinSubspace::zero(g.degree() + 2)};
  require_input(b >= 0, "partial_span: b must be >= -1");
  require_input(g.degree() >= b, "partial_span: degree smaller than b");
  std::vector<BinaryForm> gens;
  // iterated derivatives d_x^{b-i} d_y^i g via the apolar action
  for (int i = 0; i <= b; ++i) {
    DualForm op = DualForm::monomial(b, i);
    gens.push_back(apolar_apply(op, g));
  }
  return make_vertex(g.degree() - b, gens);
}

NumericalType numerical_type(const Vertex& v) {
  require_input(v.space.dim() <= static_cast<std::size_t>(v.d),
                "numerical type of the full space is undefined");
  // dimension profile of iterated partial_inverse; strictly decreasing until
  // it stabilizes at a+1
  std::vector<std::size_t> n{v.space.dim()};
  Vertex cur = v;
  const std::size_t cap = v.space.dim() + 2;
  while (true) {
    Vertex next = partial_inverse(cur);
    n.push_back(next.space.dim());
    std::size_t j = n.size() - 1;
    require_internal(n[j] <= n[j - 1], "preimage profile increased");
    if (n[j] == n[j - 1]) break;
    require_internal(j < cap, "preimage profile failed to stabilize");
    cur = next;
  }
  const std::size_t J = n.size() - 2;  // first stable index
  NumericalType nt;
  nt.a = static_cast<int>(n[J]) - 1;
  // m_j = n_j - n_{j+1} counts the b_i >= j
  std::vector<std::size_t> m(J);
  for (std::size_t j = 0; j < J; ++j) {
    m[j] = n[j] - n[j + 1];
    if (j > 0)
      require_internal(m[j] <= m[j - 1], "profile differences not monotone");
  }
  for (std::size_t j = J; j-- > 0;) {
    std::size_t count = m[j] - (j + 1 < J ? m[j + 1] : 0);
    for (std::size_t c = 0; c < count; ++c) nt.b.push_back(static_cast<int>(j));
  }
  // cross-check r against the derivative growth
  if (v.d >= 1) {
    std::size_t r_direct = partial(v).space.dim() - v.space.dim();
    require_internal(r_direct == nt.b.size(),
                     "profile r disagrees with dim dT - dim T (" +
                         std::to_string(r_direct) + " vs " + std::to_string(nt.b.size()) + ")");
  }
  return nt;
}

Vertex cd_generated_part(const Vertex& v) {
  NumericalType nt = numerical_type(v);
  // stabilization index: all b_i exhausted after max(b_i)+1 steps
  std::size_t J = nt.b.empty() ? 0 : static_cast<std::size_t>(nt.b.front()) + 1;
  Vertex cur = v;
  for (std::size_t j = 0; j < J; ++j) cur = partial_inverse(cur);
  for (std::size_t j = 0; j < J; ++j) cur = partial(cur);
  require_internal(cur.space.dim() == static_cast<std::size_t>(nt.a) + 1,
                   "curve-generated part has wrong dimension");
  return cur;
}

bool validate_type(const NumericalType& nt, int d) {
  if (nt.a < -1) return false;
  long budget = nt.a + 1;
  int prev = -1;
  for (std::size_t i = 0; i < nt.b.size(); ++i) {
    if (nt.b[i] < 0) return false;
    if (i > 0 && nt.b[i] > prev) return false;
    prev = nt.b[i];
    budget += nt.b[i] + 2;
  }
  return budget <= d;
}

Vertex make_vertex_of_type(const NumericalType& nt, int d, std::uint64_t seed) {
  require_input(validate_type(nt, d), "numerical type " + nt.str() +
                                          " is not realizable in degree " + std::to_string(d));
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  auto random_form = [&](int degree) {
    BinaryForm f(degree);
    for (int i = 0; i <= degree; ++i) f.coeff(i) = coef(rng);
    return f;
  };

  const int retries = 64;
  for (int attempt = 0; attempt < retries; ++attempt) {
    std::vector<BinaryForm> gens;
    // curve-generated part: a+1 pairwise independent pure powers
    std::vector<std::pair<int, int>> pts;
    bool ok = true;
    while (static_cast<int>(pts.size()) < nt.a + 1) {
      int p = coef(rng), q = coef(rng);
      if (p == 0 && q == 0) continue;
      bool dup = false;
      for (auto [p0, q0] : pts)
        if (p * q0 == q * p0) dup = true;
      if (dup) continue;
      pts.emplace_back(p, q);
      gens.push_back(linear_power<'x', 'y'>(Scalar(p), Scalar(q), d));
    }
    // derivative blocks of forms outside the relevant secant variety
    for (int bi : nt.b) {
      BinaryForm g;
      bool found = false;
      for (int tries = 0; tries < 32 && !found; ++tries) {
        g = random_form(d + bi);
        if (static_cast<int>(middle_cat_rank(g)) >= bi + 2) found = true;
      }
      if (!found) {
        ok = false;
        break;
      }
      for (const BinaryForm& h : basis_forms(partial_span(g, bi))) gens.push_back(h);
    }
    if (!ok) continue;
    Vertex v = make_vertex(d, gens);
    std::size_t expect = nt.a + 1;
    for (int bi : nt.b) expect += bi + 1;
    if (v.space.dim() != expect) continue;
    if (numerical_type(v) == nt) return v;
  }
  throw_check("make_vertex_of_type: retries exhausted for " + nt.str() + " in degree " +
              std::to_string(d));
}

Vertex apply_gl2(const Vertex& v, const Scalar& m00, const Scalar& m01, const Scalar& m10,
                 const Scalar& m11) {
  require_input(m00 * m11 - m01 * m10 != 0, "apply_gl2: singular matrix");
  std::vector<BinaryForm> out;
  for (const BinaryForm& f : basis_forms(v)) {
    BinaryForm acc(v.d);
    for (int i = 0; i <= v.d; ++i) {
      if (f.coeff(i) == 0) continue;
      BinaryForm xi = linear_power<'x', 'y'>(m00, m10, v.d - i);
      BinaryForm yi = linear_power<'x', 'y'>(m01, m11, i);
      acc = acc + f.coeff(i) * multiply(xi, yi);
    }
    out.push_back(acc);
  }
  return make_vertex(v.d, out);
}

std::vector<DualForm> dual_basis(const Vertex& v) {
  LinSubspace ann;
  if (v.space.dim() == 0) {
    ann = LinSubspace::full(v.d + 1);
  } else {
    ann = kernel(mat_mul(v.space.basis(), pairing_weights(v.d)));
  }
  std::vector<DualForm> out;
  for (std::size_t i = 0; i < ann.dim(); ++i) out.emplace_back(v.d, ann.basis().row(i));
  return out;
}

Vertex vertex_from_dual(int d, const std::vector<DualForm>& gens) {
  require_input(!gens.empty(), "empty dual generator list");
  std::vector<Vec> rows;
  for (const DualForm& g : gens) {
    require_input(g.degree() == d, "dual generator degree mismatch");
    rows.push_back(g.coeffs());
  }
  Matrix G = Matrix::from_rows(rows, d + 1);
  require_input(rank(G) == rows.size(), "dual generators are linearly dependent");
  return Vertex{d, kernel(mat_mul(G, pairing_weights(d)))};
}

}  // namespace rnc
