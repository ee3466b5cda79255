#include "rnc/geometry.hpp"

#include <algorithm>
#include <set>

namespace rnc {

bool meets_cd(const Vertex& v) {
  require_input(v.space.dim() >= 1, "meets_cd: zero vertex");
  require_input(v.space.dim() <= static_cast<std::size_t>(v.d), "meets_cd: full space");
  // A pure power l^d lies in T iff every dual basis form vanishes at [l].
  std::vector<DualForm> g = dual_basis(v);
  DualForm acc = g[0];
  for (std::size_t i = 1; i < g.size(); ++i) {
    acc = gcd(acc, g[i]);
    if (acc.degree() == 0) return false;
  }
  return acc.degree() >= 1;
}

bool secant_member(const BinaryForm& g, int b) {
  require_input(b >= 0, "secant_member: negative index");
  return static_cast<int>(middle_cat_rank(g)) <= b + 1;
}

bool monomial_exponents(const Vertex& v, std::vector<int>& nu_out) {
  nu_out.clear();
  const Matrix& basis = v.space.basis();
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    int nonzero = -1;
    for (std::size_t j = 0; j < basis.cols(); ++j) {
      if (basis.at(i, j) == 0) continue;
      if (nonzero >= 0) return false;
      nonzero = static_cast<int>(j);
    }
    nu_out.push_back(v.d - nonzero);  // x-exponent
  }
  return true;
}

long hilbert_dim(long dim_vp, int s) {
  require_input(dim_vp >= 0 && s >= 3, "hilbert_dim: need dim_VP >= 0 and s >= 3");
  return dim_vp + (static_cast<long>(s + 1) * (s + 1) - 1) - 3;
}

// ---------------------------------------------------------------------------
// Resultant-elimination smoothness route.
//
// The dual basis g_0..g_s doubles as the parametrization of the curve. Two
// parameters (u:v), (u':v') collide iff all 2x2 minors
// M_ij = g_i(u,v) g_j(u',v') - g_j(u,v) g_i(u',v') vanish. Each M_ij is
// divisible by uv' - u'v; the quotients F_ij of bidegree (d-1,d-1) vanish at a
// pair iff the pair collides or is a ramification point (diagonal), which is
// exactly the secant-line condition on the vertex.
// ---------------------------------------------------------------------------

namespace {

// Bihomogeneous form of bidegree (p,q): entry (i,j) multiplies
// u^{p-i} v^i u'^{q-j} v'^j.
struct BiForm {
  int p = 0, q = 0;
  Matrix grid;

  BiForm(int p_, int q_) : p(p_), q(q_), grid(p_ + 1, q_ + 1) {}
  bool is_zero() const { return grid.is_zero(); }
};

BiForm outer_minor(const DualForm& gi, const DualForm& gj) {
  const int d = gi.degree();
  BiForm m(d, d);
  for (int a = 0; a <= d; ++a)
    for (int b = 0; b <= d; ++b)
      m.grid.at(a, b) = gi.coeff(a) * gj.coeff(b) - gj.coeff(a) * gi.coeff(b);
  return m;
}

// Exact division by uv' - u'v; the remainder conditions are asserted.
BiForm divide_by_delta(const BiForm& m) {
  const int d = m.p;
  BiForm f(d - 1, d - 1);
  for (int i = 0; i <= d - 1; ++i)
    for (int b = d - 1; b >= 0; --b) {
      Scalar up = (i >= 1 && b + 1 <= d - 1) ? f.grid.at(i - 1, b + 1) : Scalar(0);
      f.grid.at(i, b) = m.grid.at(i, b + 1) + up;
    }
  // unused entries of m must be consistent
  for (int i = 0; i <= d; ++i) {
    Scalar expect = (i >= 1 && i - 1 <= d - 1) ? -f.grid.at(i - 1, 0) : Scalar(0);
    require_internal(m.grid.at(i, 0) == expect, "diagonal division not exact (column check)");
  }
  for (int j = 1; j <= d; ++j) {
    Scalar expect = (j <= d - 1) ? -f.grid.at(d - 1, j) : Scalar(0);
    require_internal(m.grid.at(d, j) == expect, "diagonal division not exact (row check)");
  }
  return f;
}

// Restriction to a fixed first point, as a binary form in the primed pair.
DualForm restrict_first(const BiForm& f, const Scalar& lam, const Scalar& mu) {
  DualForm out(f.q);
  std::vector<Scalar> lp(f.p + 1), mp(f.p + 1);
  lp[0] = mp[0] = 1;
  for (int i = 1; i <= f.p; ++i) {
    lp[i] = lp[i - 1] * lam;
    mp[i] = mp[i - 1] * mu;
  }
  for (int j = 0; j <= f.q; ++j) {
    Scalar acc(0);
    for (int i = 0; i <= f.p; ++i)
      if (f.grid.at(i, j) != 0) acc += f.grid.at(i, j) * lp[f.p - i] * mp[i];
    out.coeff(j) = acc;
  }
  return out;
}

// Newton-form interpolation through (xs[i], ys[i]).
std::vector<Scalar> interpolate(const std::vector<Scalar>& xs, const std::vector<Scalar>& ys) {
  const std::size_t n = xs.size();
  std::vector<Scalar> dd = ys;  // divided differences, computed in place
  for (std::size_t level = 1; level < n; ++level)
    for (std::size_t i = n - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  std::vector<Scalar> poly{dd[n - 1]};
  for (std::size_t i = n - 1; i-- > 0;) {
    // poly = poly * (t - xs[i]) + dd[i]
    poly.insert(poly.begin(), Scalar(0));
    for (std::size_t j = 0; j + 1 < poly.size(); ++j) poly[j] -= xs[i] * poly[j + 1];
    poly[0] += dd[i];
  }
  return poly;
}

// Resultant of two biforms with respect to the primed pair, by evaluation of
// the Sylvester determinant at D+1 first points and interpolation. The result
// is a binary form of degree D = p1 q2 + p2 q1 in (u,v).
DualForm resultant_second(const BiForm& A, const BiForm& B) {
  const int D = A.p * B.q + B.p * A.q;
  std::vector<Scalar> xs, ys;
  xs.reserve(D + 1);
  for (int m = 0; m <= D; ++m) {
    int t = (m % 2 == 0) ? m / 2 : -(m / 2 + 1);  // 0, -1, 1, -2, 2, ...
    xs.emplace_back(t);
    ys.push_back(resultant(restrict_first(A, Scalar(t), Scalar(1)),
                           restrict_first(B, Scalar(t), Scalar(1))));
  }
  std::vector<Scalar> r = interpolate(xs, ys);
  DualForm out(D);
  for (int i = 0; i <= D; ++i) {
    std::size_t deg = D - i;
    if (deg < r.size()) out.coeff(i) = r[deg];
  }
  return out;
}

struct RootScan {
  std::vector<std::pair<Scalar, Scalar>> points;  // projective (lam : mu)
  bool complete = false;    // true when the scan provably found every rational root
  int residual_degree = 0;  // degree left after removing the rational linear factors
};

// Divisors of |n| by trial division; aborts (ok=false) past the budget.
bool divisors_of(const Int& n, std::vector<Int>& out) {
  Int m = abs(n);
  require_internal(m != 0, "divisor scan of zero");
  std::vector<std::pair<Int, int>> fac;
  Int p(2);
  Int budget(1000000);
  while (m > 1) {
    if (p > budget) {
      // leftover cofactor: usable only if it is prime
      if (mpz_probab_prime_p(m.get_mpz_t(), 30) > 0) {
        fac.emplace_back(m, 1);
        break;
      }
      return false;
    }
    if (m % p == 0) {
      int e = 0;
      while (m % p == 0) {
        m /= p;
        ++e;
      }
      fac.emplace_back(p, e);
    }
    if (p * p > m && m > 1) {
      fac.emplace_back(m, 1);
      break;
    }
    p += (p == 2) ? 1 : 2;
  }
  out = {Int(1)};
  for (auto& [prime, e] : fac) {
    std::size_t base = out.size();
    Int pw(1);
    for (int i = 1; i <= e; ++i) {
      pw *= prime;
      for (std::size_t b = 0; b < base; ++b) {
        out.push_back(out[b] * pw);
        if (out.size() > 4000) return false;
      }
    }
  }
  return true;
}

// All rational projective roots of a nonzero binary form, with completeness flag.
RootScan rational_roots(const DualForm& g) {
  RootScan scan;
  const int D = g.degree();
  int lo = 0;
  while (g.coeff(lo) == 0) ++lo;
  int hi = D;
  while (g.coeff(hi) == 0) --hi;
  if (lo > 0) scan.points.emplace_back(Scalar(1), Scalar(0));  // v^lo divides
  if (hi < D) scan.points.emplace_back(Scalar(0), Scalar(1));  // u^{D-hi} divides
  // core q(t) = sum c_{lo+i} t^{(hi-lo)-i}, nonzero ends
  const int n = hi - lo;
  if (n == 0) {
    scan.complete = true;
    scan.residual_degree = 0;
    return scan;
  }
  // clear denominators to a primitive integer polynomial, index = power of t
  std::vector<Scalar> q(n + 1);
  for (int i = 0; i <= n; ++i) q[n - i] = g.coeff(lo + i);
  Int lcm(1);
  for (auto& c : q) {
    Int den = c.get_den();
    Int gg;
    mpz_gcd(gg.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    lcm = lcm / gg * den;
  }
  std::vector<Int> z(n + 1);
  for (int i = 0; i <= n; ++i) z[i] = Scalar(q[i] * Scalar(lcm)).get_num();

  std::vector<Int> num_divs, den_divs;
  bool full = divisors_of(z[0], num_divs) && divisors_of(z[n], den_divs);
  std::set<std::pair<std::string, std::string>> seen;
  std::vector<std::pair<Scalar, Scalar>> candidates;
  auto add_candidate = [&](const Int& a, const Int& b) {
    Int gg;
    mpz_gcd(gg.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    Int aa = a / gg, bb = b / gg;
    if (!seen.insert({aa.get_str(), bb.get_str()}).second) return;
    candidates.emplace_back(Scalar(aa), Scalar(bb));
    candidates.emplace_back(Scalar(-aa), Scalar(bb));
  };
  if (full && num_divs.size() * den_divs.size() <= 100000) {
    for (const Int& a : num_divs)
      for (const Int& b : den_divs) add_candidate(a, b);
  } else {
    full = false;
    for (int a = 1; a <= 30; ++a)
      for (int b = 1; b <= 30; ++b) add_candidate(Int(a), Int(b));
  }
  // evaluate the homogeneous core exactly at each candidate, record roots with
  // multiplicity by synthetic division of q
  std::vector<Int> work = z;
  int residual = n;
  std::vector<std::pair<Scalar, Scalar>> found;
  for (auto& [a, b] : candidates) {
    Scalar t0 = a / b;
    // Horner at t0 on the current quotient
    auto value_at = [&](const std::vector<Int>& poly) {
      Scalar acc(0);
      for (int i = static_cast<int>(poly.size()) - 1; i >= 0; --i)
        acc = acc * t0 + Scalar(poly[i]);
      return acc;
    };
    if (value_at(work) != 0) continue;
    found.emplace_back(a, b);
    while (residual > 0 && value_at(work) == 0) {
      // divide by (t - t0): integer-safe synthetic division over Q
      std::vector<Scalar> qq(residual);
      Scalar carry(0);
      for (int i = residual; i >= 1; --i) {
        carry = (i == residual) ? Scalar(work[i]) : Scalar(work[i]) + carry * t0;
        qq[i - 1] = carry;
      }
      // re-clear denominators
      Int l2(1);
      for (auto& c : qq) {
        Int den = c.get_den();
        Int gg;
        mpz_gcd(gg.get_mpz_t(), l2.get_mpz_t(), den.get_mpz_t());
        l2 = l2 / gg * den;
      }
      work.resize(residual);
      for (int i = 0; i < residual; ++i) work[i] = Scalar(qq[i] * Scalar(l2)).get_num();
      --residual;
    }
    if (residual == 0) break;
  }
  std::sort(found.begin(), found.end(), [](const auto& x, const auto& y) {
    return x.first * y.second < y.first * x.second;  // by t = a/b (b > 0)
  });
  for (auto& pt : found) scan.points.push_back(pt);
  scan.complete = full;
  scan.residual_degree = residual;
  return scan;
}

// gcd of the restrictions of all collision forms at a fixed first point;
// a nonconstant result certifies a collision partner over the complex numbers.
struct SecondStage {
  bool collides = false;
  std::optional<std::pair<Scalar, Scalar>> partner;
};

SecondStage second_stage(const std::vector<BiForm>& fs, const Scalar& lam, const Scalar& mu) {
  SecondStage out;
  std::optional<DualForm> acc;
  bool any_nonzero = false;
  for (const BiForm& f : fs) {
    DualForm r = restrict_first(f, lam, mu);
    if (r.is_zero()) continue;
    any_nonzero = true;
    acc = acc ? gcd(*acc, r) : r;
    if (acc->degree() == 0) return out;  // coprime restrictions: no partner
  }
  if (!any_nonzero) {
    out.collides = true;  // every restriction vanishes identically
    return out;
  }
  out.collides = true;
  RootScan rs = rational_roots(*acc);
  if (!rs.points.empty()) out.partner = rs.points.front();
  return out;
}

std::string point_str(const Scalar& lam, const Scalar& mu) {
  return "(" + scalar_str(lam) + ":" + scalar_str(mu) + ")";
}

}  // namespace

SmoothnessVerdict smoothness_by_elimination(const Vertex& v) {
  require_input(!meets_cd(v), "smoothness: vertex meets the curve");
  SmoothnessVerdict out;
  out.method = SmoothnessMethod::ResultantElimination;

  std::vector<DualForm> g = dual_basis(v);
  std::vector<BiForm> fs;
  for (std::size_t i = 0; i < g.size(); ++i)
    for (std::size_t j = i + 1; j < g.size(); ++j)
      fs.push_back(divide_by_delta(outer_minor(g[i], g[j])));

  if (fs.size() == 1) {
    // a single collision form always has zeros on P1 x P1
    out.status = Smoothness::Singular;
    out.detail = "single collision form; its zero locus is nonempty";
    for (int t = -3; t <= 3; ++t) {
      SecondStage ss = second_stage(fs, Scalar(t), Scalar(1));
      if (ss.collides) {
        out.witness.push_back({Scalar(t), Scalar(1)});
        if (ss.partner) out.witness.push_back(*ss.partner);
        break;
      }
    }
    return out;
  }

  std::optional<DualForm> G;
  std::set<std::pair<std::string, std::string>> refuted;
  std::size_t pair_budget = 60;

  auto try_candidates = [&](const DualForm& elim, RootScan& scan) -> std::optional<SmoothnessVerdict> {
    scan = rational_roots(elim);
    for (auto& [lam, mu] : scan.points) {
      if (!refuted.insert({scalar_str(lam), scalar_str(mu)}).second) continue;
      SecondStage ss = second_stage(fs, lam, mu);
      if (ss.collides) {
        SmoothnessVerdict verdict;
        verdict.method = SmoothnessMethod::ResultantElimination;
        verdict.status = Smoothness::Singular;
        verdict.witness.push_back({lam, mu});
        if (ss.partner && !(ss.partner->first * mu == ss.partner->second * lam))
          verdict.witness.push_back(*ss.partner);
        verdict.detail = "collision at parameter " + point_str(lam, mu);
        return verdict;
      }
    }
    return std::nullopt;
  };

  std::size_t processed = 0;
  bool checked_since_update = false;
  for (std::size_t a = 0; a < fs.size() && pair_budget > 0; ++a) {
    for (std::size_t b = a + 1; b < fs.size() && pair_budget > 0; ++b) {
      --pair_budget;
      ++processed;
      DualForm r = resultant_second(fs[a], fs[b]);
      if (r.is_zero()) continue;
      DualForm next = G ? gcd(*G, r) : r;
      if (G && next == *G) continue;  // no new information
      G = next;
      checked_since_update = false;
      if (G->degree() == 0) {
        out.status = Smoothness::Smooth;
        out.detail = "collision eliminant is constant after " + std::to_string(processed) +
                     " resultant pairs";
        return out;
      }
      RootScan scan;
      if (auto verdict = try_candidates(*G, scan)) return *verdict;
      checked_since_update = true;
      if (scan.complete && scan.residual_degree == 0) {
        // every root of the eliminant is rational and refuted exactly
        out.status = Smoothness::Smooth;
        out.detail = "all " + std::to_string(scan.points.size()) +
                     " rational collision candidates refuted exactly";
        return out;
      }
    }
  }

  if (!G) {
    // every computed pairwise eliminant vanished identically; probe directly
    static const int probes[][2] = {{0, 1}, {1, 0},  {1, 1},  {-1, 1}, {2, 1},
                                    {1, 2}, {-2, 1}, {-1, 2}, {3, 1},  {1, 3}};
    for (auto& pr : probes) {
      SecondStage ss = second_stage(fs, Scalar(pr[0]), Scalar(pr[1]));
      if (ss.collides) {
        out.status = Smoothness::Singular;
        out.witness.push_back({Scalar(pr[0]), Scalar(pr[1])});
        if (ss.partner) out.witness.push_back(*ss.partner);
        out.detail = "all pairwise eliminants vanish; direct probe found a collision";
        return out;
      }
    }
    out.status = Smoothness::Unknown;
    out.detail = "all pairwise eliminants vanish identically; no rational probe collided";
    return out;
  }

  (void)checked_since_update;
  out.status = Smoothness::Unknown;
  out.detail = "unresolved eliminant factor of degree " +
               std::to_string(rational_roots(*G).residual_degree) + " (eliminant degree " +
               std::to_string(G->degree()) + "); collision parameters may be irrational";
  return out;
}

SmoothnessVerdict smoothness(const Vertex& v) {
  require_input(!meets_cd(v), "smoothness: vertex meets the curve");

  std::vector<int> nu;
  if (monomial_exponents(v, nu)) {
    SmoothnessVerdict out;
    out.method = SmoothnessMethod::MonomialCriterion;
    std::vector<int> bad_low, bad_high;
    for (int e : nu) {
      if (e <= 1) bad_low.push_back(e);
      if (e >= v.d - 1) bad_high.push_back(e);
    }
    if (bad_low.empty() && bad_high.empty()) {
      out.status = Smoothness::Smooth;
      out.detail = "all monomial exponents within [2, d-2]";
    } else {
      out.status = Smoothness::Singular;
      // exponent d-1 forces a ramification at (1:0), exponent 1 at (0:1)
      if (!bad_high.empty()) out.witness.push_back({Scalar(1), Scalar(0)});
      if (!bad_low.empty()) out.witness.push_back({Scalar(0), Scalar(1)});
      out.detail = "monomial exponent outside [2, d-2]";
    }
    return out;
  }

  NumericalType nt = numerical_type(v);
  if (nt.a == -1 && nt.b.size() == 1) {
    const int e = nt.b[0];
    SmoothnessVerdict out;
    out.method = SmoothnessMethod::TypeECatalecticant;
    // recover the generator: <g> is the (e+1)-fold derivative preimage of dT
    Vertex w = partial(v);
    for (int i = 0; i <= e; ++i) w = partial_inverse(w);
    require_internal(w.space.dim() >= 1, "type-(e) generator recovery lost the generator");
    if (w.space.dim() > 1) {
      // the derivative space is degenerate (its type is not (e+1)), which
      // already certifies a secant-line intersection
      out.status = Smoothness::Singular;
      out.detail = "derivative space of the single-block vertex is degenerate";
      return out;
    }
    BinaryForm gform(w.d, w.space.basis().row(0));
    if (secant_member(gform, e + 1)) {
      out.status = Smoothness::Singular;
      out.detail = "block generator lies in the secant variety (catalecticant rank <= " +
                   std::to_string(e + 2) + ")";
    } else {
      out.status = Smoothness::Smooth;
      out.detail = "block generator avoids the secant variety";
    }
    return out;
  }

  return smoothness_by_elimination(v);
}

ScrollReport scroll_detect(const Vertex& v) {
  const int d = v.d;
  const int e = static_cast<int>(v.space.dim()) - 1;
  const int s = d - e - 1;
  require_input(v.space.dim() >= 1, "scroll_detect: zero vertex");
  require_input(s >= 3, "scroll_detect: ambient dimension below 3");
  SmoothnessVerdict sv = smoothness(v);
  require_input(sv.status == Smoothness::Smooth,
                "scroll_detect: curve not certified smooth (precondition)");
  NumericalType nt = numerical_type(v);
  ScrollReport rep;
  rep.e = e;
  rep.scroll_degree = s - 1;
  rep.on_scroll = (nt.a == -1 && nt.b.size() == 1);
  if (!rep.on_scroll) return rep;
  require_internal(nt.b[0] == e, "single-block size disagrees with dim T");
  SplittingType tf;
  tf.kind = BundleKind::Tangent;
  tf.d = d;
  tf.e = e;
  tf.c = {e};
  tf.c.resize(s, -1);
  rep.tangent = tf;
  rep.normal = closed_form_type_e(d, e);
  rep.unique = true;
  require_internal(tangent_splitting(v) == *rep.tangent,
                   "scroll tangent formula disagrees with the computed splitting");
  return rep;
}

}  // namespace rnc
