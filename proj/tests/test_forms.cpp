#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rnc/binary_form.hpp"

using namespace rnc;

namespace {

BinaryForm random_form(std::mt19937_64& rng, int degree) {
  std::uniform_int_distribution<int> dist(-9, 9);
  BinaryForm f(degree);
  for (int i = 0; i <= degree; ++i) f.coeff(i) = dist(rng);
  return f;
}

}  // namespace

TEST_CASE("parse: monomials and sums") {
  BinaryForm f = parse_form<BinaryForm>("x^8*y^3", 11);
  for (int i = 0; i <= 11; ++i) CHECK(f.coeff(i) == (i == 3 ? 1 : 0));

  BinaryForm g = parse_form<BinaryForm>("2*x^2 - 3*x*y + y^2", 2);
  CHECK(g.coeffs() == Vec{Scalar(2), Scalar(-3), Scalar(1)});

  BinaryForm h = parse_form<BinaryForm>("x^4*y^8 + x^8*y^4", 12);
  CHECK(h.coeff(8) == 1);
  CHECK(h.coeff(4) == 1);
  CHECK(h.coeff(6) == 0);

  CHECK(parse_form<BinaryForm>("3/2*x", 1).coeff(0) == frac(3, 2));
  CHECK(parse_form<BinaryForm>("-x^2 + y^2", 2).coeff(0) == -1);
  CHECK(parse_form<BinaryForm>("5", 0).coeff(0) == 5);
  CHECK(parse_form<DualForm>("u^2*v", 3).coeff(1) == 1);
}

TEST_CASE("parse: rejects bad input") {
  CHECK_THROWS_AS(parse_form<BinaryForm>("x^2", 3), Error);          // degree mismatch
  CHECK_THROWS_AS(parse_form<BinaryForm>("x^2 + y", 2), Error);      // mixed degrees
  CHECK_THROWS_AS(parse_form<BinaryForm>("x +", 1), Error);          // dangling sign
  CHECK_THROWS_AS(parse_form<BinaryForm>("2*", 0), Error);           // missing mono
  CHECK_THROWS_AS(parse_form<BinaryForm>("x ** y", 2), Error);       // bad token
  CHECK_THROWS_AS(parse_form<BinaryForm>("7", 1), Error);            // bare coef, deg > 0
  CHECK_THROWS_AS(parse_form<BinaryForm>("u^2", 2), Error);          // wrong variables
}

TEST_CASE("print / parse round trip") {
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 40; ++rep) {
    BinaryForm f = random_form(rng, 1 + rep % 9);
    CHECK(parse_form<BinaryForm>(form_str(f), f.degree()) == f);
  }
  CHECK(form_str(BinaryForm(3)) == "0");
  CHECK(form_str(parse_form<BinaryForm>("x^2-2*x*y+1/3*y^2", 2)) == "x^2 - 2*x*y + 1/3*y^2");
}

TEST_CASE("derivative") {
  CHECK(derivative(parse_form<BinaryForm>("x^2", 2), 0) == parse_form<BinaryForm>("2*x", 1));
  CHECK(derivative(parse_form<BinaryForm>("x^8*y^3", 11), 1) ==
        parse_form<BinaryForm>("3*x^8*y^2", 10));
  CHECK(derivative(parse_form<BinaryForm>("x^4*y^7 + x^6*y^5", 11), 0) ==
        parse_form<BinaryForm>("4*x^3*y^7 + 6*x^5*y^5", 10));
  CHECK_THROWS_AS(derivative(parse_form<BinaryForm>("5", 0), 0), Error);
}

TEST_CASE("apolar action") {
  // d/dx on x^2
  CHECK(apolar_apply(parse_form<DualForm>("u", 1), parse_form<BinaryForm>("x^2", 2)) ==
        parse_form<BinaryForm>("2*x", 1));
  // pure power rule with f = u^2, l = x+y: f(l^2) = 2, so the action on l^4 is
  // C(4,2)*2*(x+y)^2 = 12(x+y)^2
  BinaryForm l4 = linear_power<'x', 'y'>(Scalar(1), Scalar(1), 4);
  BinaryForm expect = Scalar(12) * linear_power<'x', 'y'>(Scalar(1), Scalar(1), 2);
  CHECK(apolar_apply(parse_form<DualForm>("u^2", 2), l4) == expect);
  // dxdy on x^3 y
  CHECK(apolar_apply(parse_form<DualForm>("u*v", 2), parse_form<BinaryForm>("x^3*y", 4)) ==
        parse_form<BinaryForm>("3*x^2", 2));
  CHECK_THROWS_AS(
      apolar_apply(parse_form<DualForm>("u^3", 3), parse_form<BinaryForm>("x^2", 2)), Error);
}

TEST_CASE("apolar action on pure powers matches the binomial rule") {
  std::mt19937_64 rng(2);
  std::uniform_int_distribution<int> dist(-5, 5);
  for (int rep = 0; rep < 20; ++rep) {
    int b = 3 + rep % 5, k = 1 + rep % 3;
    Scalar lam(dist(rng)), mu(dist(rng));
    if (lam == 0 && mu == 0) continue;
    DualForm op(k);
    for (int i = 0; i <= k; ++i) op.coeff(i) = dist(rng);
    BinaryForm lb = linear_power<'x', 'y'>(lam, mu, b);
    // f(l^k) = k! f(lam,mu), and the pairing computes exactly k! f(lam,mu)
    Scalar flk = pairing(op, linear_power<'x', 'y'>(lam, mu, k));
    BinaryForm rhs = Scalar(binomial(b, k)) * flk * linear_power<'x', 'y'>(lam, mu, b - k);
    CHECK(apolar_apply(op, lb) == rhs);
  }
}

TEST_CASE("pairing") {
  CHECK(pairing(parse_form<DualForm>("u^2", 2), parse_form<BinaryForm>("x^2", 2)) == 2);
  CHECK(pairing(parse_form<DualForm>("u*v", 2), parse_form<BinaryForm>("x^2", 2)) == 0);
  // f = (u+v)^3 on l^3 with l = x+2y: 3! * f(1,2) = 6 * 27
  DualForm f = linear_power<'u', 'v'>(Scalar(1), Scalar(1), 3);
  BinaryForm l3 = linear_power<'x', 'y'>(Scalar(1), Scalar(2), 3);
  CHECK(pairing(f, l3) == 162);
  CHECK_THROWS_AS(
      pairing(parse_form<DualForm>("u", 1), parse_form<BinaryForm>("x^2", 2)), Error);
  // Gram matrix of the monomial bases is diagonal with entries i!(d-i)!
  const int d = 5;
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j)
      CHECK(pairing(DualForm::monomial(d, i), BinaryForm::monomial(d, j)) ==
            (i == j ? Scalar(factorial(i) * factorial(d - i)) : Scalar(0)));
}

TEST_CASE("Leibniz compatibility of the two actions") {
  // (u*f')(g) = f'(dx g): multiplication on the operator side matches
  // differentiation on the target side
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> dist(-9, 9);
  for (int rep = 0; rep < 20; ++rep) {
    int k = 1 + rep % 3, b = k + 2 + rep % 4;
    DualForm fp(k);
    for (int i = 0; i <= k; ++i) fp.coeff(i) = dist(rng);
    BinaryForm g = random_form(rng, b);
    DualForm u = parse_form<DualForm>("u", 1);
    CHECK(apolar_apply(multiply(u, fp), g) == apolar_apply(fp, derivative(g, 0)));
    DualForm v = parse_form<DualForm>("v", 1);
    CHECK(apolar_apply(multiply(v, fp), g) == apolar_apply(fp, derivative(g, 1)));
  }
}

TEST_CASE("multiply") {
  CHECK(multiply(parse_form<BinaryForm>("x", 1), parse_form<BinaryForm>("y", 1)) ==
        parse_form<BinaryForm>("x*y", 2));
  CHECK(multiply(parse_form<BinaryForm>("x + y", 1), parse_form<BinaryForm>("x - y", 1)) ==
        parse_form<BinaryForm>("x^2 - y^2", 2));
  CHECK(multiply(parse_form<BinaryForm>("x^4*y^8", 12), parse_form<BinaryForm>("1", 0)) ==
        parse_form<BinaryForm>("x^4*y^8", 12));
}

TEST_CASE("gcd") {
  CHECK(gcd(parse_form<BinaryForm>("x^2", 2), parse_form<BinaryForm>("x*y", 2)) ==
        parse_form<BinaryForm>("x", 1));
  CHECK(gcd(parse_form<DualForm>("u^11", 11), parse_form<DualForm>("v^11", 11)).degree() == 0);
  CHECK(gcd(parse_form<BinaryForm>("x^2 - y^2", 2),
            parse_form<BinaryForm>("x^2 + 2*x*y + y^2", 2)) ==
        parse_form<BinaryForm>("x + y", 1));
  CHECK_THROWS_AS(gcd(BinaryForm(2), BinaryForm(3)), Error);
  // common y-powers survive the dehomogenization
  CHECK(gcd(parse_form<BinaryForm>("x*y^2", 3), parse_form<BinaryForm>("y^3", 3)) ==
        parse_form<BinaryForm>("y^2", 2));
}

TEST_CASE("gcd divides both inputs and detects common roots") {
  std::mt19937_64 rng(4);
  std::uniform_int_distribution<int> small(-4, 4);
  auto rand_linear = [&]() {
    Scalar a(small(rng)), b(small(rng));
    if (a == 0 && b == 0) a = 1;
    return linear_power<'x', 'y'>(a, b, 1);
  };
  for (int rep = 0; rep < 25; ++rep) {
    BinaryForm f = rand_linear(), g = rand_linear();
    BinaryForm common = rand_linear();
    bool share = rep % 2 == 0;
    if (share) {
      f = multiply(f, common);
      g = multiply(g, common);
    }
    BinaryForm h = gcd(f, g);
    CHECK(gcd(h, f) == h);  // h divides f
    CHECK(gcd(h, g) == h);
    bool nontrivial = h.degree() >= 1;
    CHECK(nontrivial == (resultant(f, g) == 0));
    if (share) CHECK(nontrivial);
  }
}

TEST_CASE("resultant") {
  CHECK(resultant(parse_form<BinaryForm>("x", 1), parse_form<BinaryForm>("y", 1)) != 0);
  CHECK(resultant(parse_form<BinaryForm>("x - y", 1), parse_form<BinaryForm>("x - y", 1)) == 0);
  CHECK(resultant(parse_form<BinaryForm>("x^2 - y^2", 2), parse_form<BinaryForm>("x + y", 1)) ==
        0);
  CHECK_THROWS_AS(
      resultant(parse_form<BinaryForm>("1", 0), parse_form<BinaryForm>("x", 1)), Error);
}

TEST_CASE("catalecticant") {
  // pure powers have rank 1 at every level
  BinaryForm xn = parse_form<BinaryForm>("x^7", 7);
  for (int k = 0; k <= 7; ++k) CHECK(cat_rank(xn, k) == 1);

  // the monomial x^4 y^8 has middle rank min(4,8)+1 = 5
  CHECK(middle_cat_rank(parse_form<BinaryForm>("x^4*y^8", 12)) == 5);

  // x^3 + y^3 at k=1: 3x2 matrix of rank 2
  BinaryForm c = parse_form<BinaryForm>("x^3 + y^3", 3);
  Matrix m = catalecticant(c, 1);
  CHECK(m.rows() == 3);
  CHECK(m.cols() == 2);
  CHECK(rank(m) == 2);

  CHECK_THROWS_AS(catalecticant(c, 4), Error);
  CHECK_THROWS_AS(catalecticant(c, -1), Error);
}

TEST_CASE("catalecticant rank is symmetric in k") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 15; ++rep) {
    BinaryForm g = random_form(rng, 4 + rep % 6);
    for (int k = 0; k <= g.degree(); ++k)
      CHECK(cat_rank(g, k) == cat_rank(g, g.degree() - k));
  }
}
