#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>
#include <random>

#include "rnc/splitting.hpp"
#include "rnc/tensor2.hpp"

using namespace rnc;

namespace {

Vertex from_exprs(int d, std::initializer_list<const char*> exprs) {
  std::vector<BinaryForm> gens;
  for (const char* e : exprs) gens.push_back(parse_form<BinaryForm>(e, d));
  return make_vertex(d, gens);
}

Vertex vertex_B() { return from_exprs(11, {"x^8*y^3", "x^6*y^5", "x^4*y^7"}); }
Vertex vertex_A() { return from_exprs(11, {"x^3*y^8", "x^4*y^7", "x^7*y^4"}); }

// random vertex of the given dimension that misses the curve
Vertex random_missing_vertex(std::mt19937_64& rng, int d, int dim_T) {
  std::uniform_int_distribution<int> dist(-9, 9);
  while (true) {
    std::vector<BinaryForm> gens;
    for (int r = 0; r < dim_T; ++r) {
      BinaryForm f(d);
      for (int i = 0; i <= d; ++i) f.coeff(i) = dist(rng);
      gens.push_back(f);
    }
    Vertex v = make_vertex(d, gens);
    if (v.space.dim() != static_cast<std::size_t>(dim_T)) continue;
    if (numerical_type(v).a == -1) return v;
  }
}

}  // namespace

TEST_CASE("normal sections of the reference vertex") {
  Vertex v = vertex_B();
  CHECK(h0_normal(v, 0) == 13);
  CHECK(h0_normal(v, 1) == 6);
  CHECK(h0_normal(v, 2) == 2);
  CHECK(h0_normal(v, 3) == 0);
  CHECK(normal_profile(v).values == std::vector<int>{13, 6, 2, 0});
}

TEST_CASE("first twist is always twice the vertex dimension") {
  std::mt19937_64 rng(1);
  for (int rep = 0; rep < 10; ++rep) {
    Vertex v = random_missing_vertex(rng, 6 + rep % 6, 1 + rep % 3);
    CHECK(h0_normal(v, 1) == 2 * static_cast<int>(v.space.dim()));
    CHECK(h0_normal(v, 0) == v.d - 1 + static_cast<int>(v.space.dim()));
  }
}

TEST_CASE("single-block vertices follow the closed-form profile") {
  std::mt19937_64 seeds(2);
  Vertex v = make_vertex_of_type(NumericalType{-1, {2}}, 11, seeds());
  const int e = 2;
  for (int k = 1; k <= 2 * e + 4; ++k) {
    int expect = std::max(0, 2 * e + 4 - 2 * k);
    CHECK(h0_normal(v, k) == expect);
  }
  CHECK(h0_normal(v, 2) == 4);
}

TEST_CASE("tangent sections: fixed cases and two-route agreement") {
  Vertex a = vertex_A();
  CHECK(h0_tangent(a, 0) == 3);
  CHECK(h0_tangent(a, 1) == 1);
  CHECK(h0_tangent(a, 2) == 0);

  std::mt19937_64 seeds(3);
  for (int e = 1; e <= 3; ++e) {
    Vertex v = make_vertex_of_type(NumericalType{-1, {e}}, e + 6, seeds());
    for (int k = 0; k <= e; ++k) CHECK(h0_tangent(v, k) == e + 1 - k);
    CHECK(h0_tangent(v, e + 1) == 0);
  }
}

TEST_CASE("normal splitting of both reference vertices") {
  std::vector<int> expect = {2, 2, 1, 1, 0, 0, 0};
  SplittingType sb = normal_splitting(vertex_B());
  CHECK(sb.c == expect);
  CHECK(sb.str() == "O^2(15) + O^2(14) + O^3(13)");
  CHECK(sb.twists() == std::vector<int>{15, 15, 14, 14, 13, 13, 13});
  CHECK(normal_splitting(vertex_A()).c == expect);
}

TEST_CASE("normal splitting of single-block vertices") {
  std::mt19937_64 seeds(5);
  for (auto [d, e] : {std::pair{11, 2}, {9, 1}, {8, 0}, {12, 3}}) {
    Vertex v = make_vertex_of_type(NumericalType{-1, {e}}, d, seeds());
    SplittingType st = normal_splitting(v);
    CHECK(st == closed_form_type_e(d, e));
  }
}

TEST_CASE("tangent splitting from the numerical type") {
  CHECK(tangent_splitting(vertex_A()).str() == "O(14) + O(13) + O^6(12)");
  CHECK(tangent_splitting(vertex_B()).str() == "O^3(13) + O^5(12)");
  CHECK(tangent_splitting(from_exprs(5, {"x^4*y", "x*y^4"})).str() == "O^2(7) + O(6)");
  // a vertex through the curve has no projection interpretation
  CHECK_THROWS_AS(tangent_splitting(from_exprs(5, {"x^5", "x^3*y^2"})), Error);
}

TEST_CASE("oracle matches the kernel route on the reference vertex") {
  Vertex v = vertex_B();
  CHECK(normal_oracle(v, 1) == 6);
  CHECK(normal_oracle(v, 2) == 2);
  CHECK(normal_oracle(v, 3) == 0);
  CHECK_THROWS_AS(normal_oracle(v, 0), Error);
}

TEST_CASE("oracle equivalence on random vertices") {
  std::mt19937_64 rng(7);
  for (int rep = 0; rep < 12; ++rep) {
    Vertex v = random_missing_vertex(rng, 6 + rep % 5, 1 + rep % 3);
    const int e = static_cast<int>(v.space.dim()) - 1;
    for (int k = 1; k <= 2 * e + 4; ++k) CHECK(h0_normal(v, k) == normal_oracle(v, k));
  }
}

TEST_CASE("closed forms") {
  ClosedForms cb = closed_forms(vertex_B());
  CHECK(cb.k0 == 13);
  CHECK(cb.k1 == 6);
  CHECK(cb.k2 == 2);
  CHECK(cb.bottom_summands == 3);

  ClosedForms ca = closed_forms(vertex_A());
  CHECK(ca.k2 == 2);  // dim d2T = 7 for both reference vertices

  Vertex small = from_exprs(4, {"x^2*y^2"});
  ClosedForms cs = closed_forms(small);
  CHECK(cs.k0 == 4);
  CHECK(cs.k1 == 2);
  CHECK(cs.k2 == 0);
}

TEST_CASE("closed forms agree with the engine everywhere") {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 15; ++rep) {
    Vertex v = random_missing_vertex(rng, 5 + rep % 7, 1 + rep % 4);
    ClosedForms cf = closed_forms(v);
    CHECK(cf.k0 == h0_normal(v, 0));
    CHECK(cf.k1 == h0_normal(v, 1));
    CHECK(cf.k2 == h0_normal(v, 2));
  }
}

TEST_CASE("closed-form splitting for single blocks") {
  SplittingType s1 = closed_form_type_e(11, 2);
  CHECK(s1.str() == "O^2(16) + O^5(13)");
  SplittingType s2 = closed_form_type_e(6, 1);
  CHECK(s2.str() == "O^2(10) + O(8)");
  CHECK_THROWS_AS(closed_form_type_e(5, 2), Error);
}

TEST_CASE("bottom summand count matches the recovered multiset") {
  std::mt19937_64 rng(13);
  for (int rep = 0; rep < 10; ++rep) {
    Vertex v = random_missing_vertex(rng, 7 + rep % 5, 1 + rep % 3);
    SplittingType st = normal_splitting(v);
    int zeros = static_cast<int>(std::count(st.c.begin(), st.c.end(), 0));
    CHECK(zeros == closed_forms(v).bottom_summands);
  }
}

TEST_CASE("conservation sums hold on every returned splitting") {
  std::mt19937_64 rng(17);
  for (int rep = 0; rep < 25; ++rep) {
    Vertex v = random_missing_vertex(rng, 6 + rep % 7, 1 + rep % 4);
    SplittingType st = normal_splitting(v);
    const int d = st.d, e = st.e;
    long sum_c = std::accumulate(st.c.begin(), st.c.end(), 0L);
    CHECK(sum_c + static_cast<long>(st.c.size()) == d + e);
    CHECK(sum_c == 2L * (e + 1));
    CHECK(st.c.back() >= 0);
    CHECK(static_cast<int>(st.c.size()) == d - e - 2);
  }
}

TEST_CASE("restriction rank is additive over compatible direct sums") {
  // T = d(x^4 y^8) + <x^7 y^4> with d2 T splitting accordingly
  Vertex t1 = partial_span(parse_form<BinaryForm>("x^4*y^8", 12), 1);
  Vertex t2 = from_exprs(11, {"x^7*y^4"});
  Vertex t = Vertex{11, sum(t1.space, t2.space)};
  REQUIRE(t.space.dim() == 3);
  Vertex d2t = partial(partial(t)), d2t1 = partial(partial(t1)), d2t2 = partial(partial(t2));
  REQUIRE(d2t.space.dim() == d2t1.space.dim() + d2t2.space.dim());

  auto restricted_rank = [](const Vertex& v, int k) {
    std::vector<Vec> rows;
    for (int i = 0; i <= k; ++i)
      for (std::size_t m = 0; m < v.space.dim(); ++m) {
        Tensor2 bt(k, v.d);
        for (int j = 0; j <= v.d; ++j) bt.at(i, j) = v.space.basis().at(m, j);
        rows.push_back(flatten(transvect_D2(bt)));
      }
    return rank(Matrix::from_rows(rows, (k - 1) * (v.d - 1)));
  };
  for (int k = 2; k <= 4; ++k)
    CHECK(restricted_rank(t, k) == restricted_rank(t1, k) + restricted_rank(t2, k));
}

TEST_CASE("quadrics through the projected curve") {
  CHECK(quadrics_through(from_exprs(5, {"x^4*y", "x*y^4"})) == 1);
  CHECK(quadrics_through(from_exprs(4, {"x^2*y^2"})) == 1);

  // scroll case at the bound: type (3) in degree 7, s = 3, bound (s-1)(s-2)/2 = 1
  std::mt19937_64 seeds(19);
  Vertex v = make_vertex_of_type(NumericalType{-1, {3}}, 7, seeds());
  CHECK(quadrics_through(v) == 1);
}
