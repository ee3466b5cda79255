#include "rnc/splitting.hpp"

#include <algorithm>

#include "rnc/tensor2.hpp"

namespace rnc {

namespace {

void require_misses_curve(const Vertex& v, const char* who) {
  NumericalType nt = numerical_type(v);
  require_input(nt.a == -1, std::string(who) +
                                ": vertex meets the rational normal curve (type " + nt.str() +
                                "), the projection is not base-point-free");
}

// Matrix of D or D^2 restricted to the k-graded slice S^kU (x) T, columns
// indexed by (monomial i, basis form m).
Matrix restricted_transvectant(const Vertex& v, int k, int order) {
  const int d = v.d;
  const auto& basis = v.space.basis();
  const std::size_t dimT = v.space.dim();
  const int out_rows = order == 1 ? k * d : (k - 1) * (d - 1);
  Matrix m(out_rows, (k + 1) * dimT);
  for (int i = 0; i <= k; ++i)
    for (std::size_t t = 0; t < dimT; ++t) {
      Tensor2 basis_tensor(k, d);
      for (int j = 0; j <= d; ++j) basis_tensor.at(i, j) = basis.at(t, j);
      Tensor2 img = order == 1 ? transvect_D(basis_tensor) : transvect_D2(basis_tensor);
      Vec col = flatten(img);
      for (std::size_t r = 0; r < col.size(); ++r) m.at(r, i * dimT + t) = col[r];
    }
  return m;
}

int second_difference_counts(const std::vector<int>& prof, int k) {
  auto at = [&](int j) { return j < static_cast<int>(prof.size()) ? prof[j] : 0; };
  return at(k) - 2 * at(k + 1) + at(k + 2);
}

std::string profile_str(const std::vector<int>& prof) {
  std::string s = "(";
  for (std::size_t i = 0; i < prof.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(prof[i]);
  }
  return s + ")";
}

}  // namespace

std::vector<int> SplittingType::twists() const {
  std::vector<int> t;
  t.reserve(c.size());
  for (int ci : c) t.push_back(ci + d + 2);
  return t;
}

std::string SplittingType::str() const {
  std::string s;
  std::vector<int> tw = twists();
  for (std::size_t i = 0; i < tw.size();) {
    std::size_t j = i;
    while (j < tw.size() && tw[j] == tw[i]) ++j;
    if (!s.empty()) s += " + ";
    s += "O";
    if (j - i > 1) s += "^" + std::to_string(j - i);
    s += "(" + std::to_string(tw[i]) + ")";
    i = j;
  }
  return s.empty() ? "0" : s;
}

int h0_normal(const Vertex& v, int k) {
  require_input(k >= 0, "negative twist level");
  require_misses_curve(v, "h0_normal");
  const int dimT = static_cast<int>(v.space.dim());
  if (k == 0) {
    // preimage of T under the multiplication map U (x) S^{d-1}U -> S^dU
    int val = static_cast<int>(preimage(mult_matrix(v.d), v.space).dim());
    require_internal(val == v.d - 1 + dimT, "multiplication preimage dimension mismatch");
    return val;
  }
  if (k == 1) return 2 * dimT;  // the squared transvectant vanishes on U (x) S^dU
  Matrix m = restricted_transvectant(v, k, 2);
  return static_cast<int>(m.cols() - rank(m));
}

int h0_tangent(const Vertex& v, int k) {
  require_input(k >= 0, "negative twist level");
  require_misses_curve(v, "h0_tangent");
  int via_preimage;
  {
    Vertex cur = v;
    for (int j = 0; j < k; ++j) cur = partial_inverse(cur);
    via_preimage = static_cast<int>(cur.space.dim());
  }
  int via_kernel;
  if (k == 0) {
    via_kernel = static_cast<int>(v.space.dim());
  } else {
    Matrix m = restricted_transvectant(v, k, 1);
    via_kernel = static_cast<int>(m.cols() - rank(m));
  }
  require_internal(via_kernel == via_preimage,
                   "tangent routes disagree: kernel " + std::to_string(via_kernel) +
                       " vs preimage " + std::to_string(via_preimage));
  return via_kernel;
}

CohomologyProfile normal_profile(const Vertex& v) {
  CohomologyProfile p;
  p.d = v.d;
  p.e = static_cast<int>(v.space.dim()) - 1;
  const int cap = 2 * p.e + 4;
  for (int k = 0; k <= cap; ++k) {
    int val = h0_normal(v, k);
    p.values.push_back(val);
    if (k >= 1 && val == 0) break;
  }
  require_check(p.values.back() == 0,
                "normal section profile " + profile_str(p.values) +
                    " did not reach zero within the twist cap " + std::to_string(cap));
  for (std::size_t k = 1; k + 1 < p.values.size(); ++k)
    require_check(p.values[k] >= p.values[k + 1],
                  "normal section profile " + profile_str(p.values) + " is not non-increasing");
  return p;
}

SplittingType normal_splitting(const Vertex& v) {
  CohomologyProfile p = normal_profile(v);
  const int d = p.d, e = p.e;
  const int s = d - e - 1;
  SplittingType st;
  st.kind = BundleKind::Normal;
  st.d = d;
  st.e = e;
  const int kmax = static_cast<int>(p.values.size()) - 1;  // values[kmax] = 0
  for (int k = kmax - 1; k >= 0; --k) {
    int count = second_difference_counts(p.values, k);
    require_check(count >= 0, "negative multiplicity in the twist recovery at level " +
                                  std::to_string(k) + ", profile " + profile_str(p.values));
    for (int c = 0; c < count; ++c) st.c.push_back(k);
  }
  long sum_c = 0, sum_c1 = 0;
  for (int ci : st.c) {
    sum_c += ci;
    sum_c1 += ci + 1;
  }
  bool ok = static_cast<int>(st.c.size()) == s - 1 && sum_c1 == d + e &&
            sum_c == 2 * (e + 1) && (st.c.empty() || st.c.back() >= 0);
  require_check(ok, "normal splitting conservation failed: profile " + profile_str(p.values) +
                        ", recovered c " + profile_str(st.c) +
                        " (either the curve has non-ordinary singularities or this is a bug)");
  return st;
}

SplittingType tangent_splitting(const Vertex& v) {
  NumericalType nt = numerical_type(v);
  require_input(nt.a == -1,
                "tangent_splitting: vertex meets the curve (type " + nt.str() + ")");
  const int d = v.d;
  const int e = static_cast<int>(v.space.dim()) - 1;
  const int s = d - e - 1;
  require_input(nt.r() <= s, "tangent_splitting: more blocks than the ambient dimension");
  SplittingType st;
  st.kind = BundleKind::Tangent;
  st.d = d;
  st.e = e;
  st.c = nt.b;
  st.c.resize(s, -1);  // s - r summands of degree d+1

  // cross-check against the section profile of the tangent bundle
  std::vector<int> prof;
  const int cap = (nt.b.empty() ? 0 : nt.b.front()) + 2;
  for (int k = 0; k <= cap; ++k) {
    prof.push_back(h0_tangent(v, k));
    if (prof.back() == 0) break;
  }
  require_internal(prof.back() == 0, "tangent profile did not terminate");
  std::vector<int> recovered;
  for (int k = static_cast<int>(prof.size()) - 2; k >= 0; --k) {
    int count = second_difference_counts(prof, k);
    require_internal(count >= 0, "tangent profile second difference negative");
    for (int c = 0; c < count; ++c) recovered.push_back(k);
  }
  require_internal(recovered == nt.b,
                   "tangent splitting from the type disagrees with the section profile");
  return st;
}

int normal_oracle(const Vertex& v, int k) {
  require_input(k >= 1, "normal_oracle needs k >= 1");
  require_misses_curve(v, "normal_oracle");
  const int d = v.d;
  const int n = d + k - 1;  // degree of the unknowns f0, f1
  LinSubspace ann = dot_complement(v.space);
  const std::size_t rows_per = ann.dim();
  Matrix sys((k + 1) * rows_per, 2 * (n + 1));
  for (int i = 0; i <= k; ++i) {
    // raw condition map for P = u^{k-i} v^i: (f0,f1) -> x P(f0) + y P(f1)
    Matrix raw(d + 1, 2 * (n + 1));
    DualForm P = DualForm::monomial(k, i);
    for (int j = 0; j <= n; ++j) {
      BinaryForm img = apolar_apply(P, BinaryForm::monomial(n, j));  // degree d-1
      for (int t = 0; t <= d - 1; ++t) {
        if (img.coeff(t) == 0) continue;
        raw.at(t, j) += img.coeff(t);              // multiplied by x
        raw.at(t + 1, n + 1 + j) += img.coeff(t);  // multiplied by y
      }
    }
    if (rows_per == 0) continue;
    Matrix block = mat_mul(ann.basis(), raw);
    for (std::size_t r = 0; r < rows_per; ++r)
      for (std::size_t cidx = 0; cidx < sys.cols(); ++cidx)
        sys.at(i * rows_per + r, cidx) = block.at(r, cidx);
  }
  return static_cast<int>(sys.cols() - rank(sys));
}

ClosedForms closed_forms(const Vertex& v) {
  require_misses_curve(v, "closed_forms");
  const int dimT = static_cast<int>(v.space.dim());
  int dim_d2T = static_cast<int>(partial(partial(v)).space.dim());
  ClosedForms cf;
  cf.k0 = v.d - 1 + dimT;
  cf.k1 = 2 * dimT;
  cf.k2 = 3 * dimT - dim_d2T;
  cf.bottom_summands = v.d - 1 - dim_d2T;
  return cf;
}

SplittingType closed_form_type_e(int d, int e) {
  NumericalType nt;
  nt.b = {e};
  require_input(d - e - 4 >= 0, "closed_form_type_e: need d - e - 4 >= 0");
  require_input(validate_type(nt, d), "closed_form_type_e: type (e) not realizable");
  SplittingType st;
  st.kind = BundleKind::Normal;
  st.d = d;
  st.e = e;
  st.c.assign(2, e + 1);
  st.c.resize(2 + (d - e - 4), 0);
  return st;
}

int quadrics_through(const Vertex& v) {
  require_misses_curve(v, "quadrics_through");
  const int d = v.d;
  std::vector<DualForm> g = dual_basis(v);
  const std::size_t sp1 = g.size();  // s + 1
  std::vector<Vec> cols;
  for (std::size_t a = 0; a < sp1; ++a)
    for (std::size_t b = a; b < sp1; ++b) cols.push_back(multiply(g[a], g[b]).coeffs());
  Matrix m(2 * d + 1, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < cols[c].size(); ++r) m.at(r, c) = cols[c][r];
  int val = static_cast<int>(m.cols() - rank(m));
  const int s = static_cast<int>(sp1) - 1;
  if (d >= 2 * s + 1)
    require_check(val <= (s - 1) * (s - 2) / 2,
                  "quadric count exceeds the Castelnuovo-style bound");
  return val;
}

}  // namespace rnc
