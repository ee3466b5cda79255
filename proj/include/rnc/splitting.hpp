#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rnc/vertex.hpp"

namespace rnc {

enum class BundleKind { Tangent, Normal };

// Multiset of twists c_i, non-increasing; the realized line-bundle degrees are
// c_i + d + 2 (so a summand O(d+1) appears as c_i = -1, tangent case only).
struct SplittingType {
  BundleKind kind = BundleKind::Normal;
  int d = 0, e = 0;
  std::vector<int> c;

  std::vector<int> twists() const;  // c_i + d + 2, non-increasing
  std::string str() const;          // "O^2(15) + O^2(14) + O^3(13)"
  friend bool operator==(const SplittingType& a, const SplittingType& b) = default;
};

// values[k] = dimension of the twisted sections at level k, k = 0,1,... ending
// with the first zero. Normal profile: h0 at twist -d-2-k.
struct CohomologyProfile {
  int d = 0, e = 0;
  std::vector<int> values;
};

// Twisted global-section dimensions of the normal bundle: k = 0 is the
// multiplication-map preimage dimension d-1+dim T, k >= 1 the kernel of the
// squared transvectant restricted to S^kU (x) T. Requires the vertex to miss
// the curve (numerical type with a = -1).
int h0_normal(const Vertex& v, int k);

// Same for the restricted tangent bundle. Computes both routes -- the kernel of
// the transvectant on S^kU (x) T and the iterated derivative preimage -- and
// insists they agree.
int h0_tangent(const Vertex& v, int k);

CohomologyProfile normal_profile(const Vertex& v);

// Splitting recovered from the profile by second differences; validates the
// degree/rank conservation sums and c >= 0 before returning.
SplittingType normal_splitting(const Vertex& v);

// Splitting read off the numerical type, cross-checked against the section
// profile of the tangent bundle by second differences (hard assertion).
SplittingType tangent_splitting(const Vertex& v);

// Independent oracle for the normal sections at k >= 1: the dimension of
// {(f0,f1) : x P(f0) + y P(f1) in T for all degree-k dual monomials P},
// computed directly as a linear system without the transvectant machinery.
int normal_oracle(const Vertex& v, int k);

struct ClosedForms {
  int k0, k1, k2;      // d-1+dimT, 2 dimT, 3 dimT - dim d2T
  int bottom_summands; // number of twists equal to d+2: d-1 - dim d2T
};
ClosedForms closed_forms(const Vertex& v);

// Splitting of a curve with a single-block vertex of type (e):
// two summands of degree d+e+3 and d-e-4 summands of degree d+2.
SplittingType closed_form_type_e(int d, int e);

// Dimension of the space of quadrics through the projected curve: kernel of
// Sym^2 of the dual space multiplying into the degree-2d dual forms. Asserts
// the (s-1)(s-2)/2 bound when d >= 2s+1.
int quadrics_through(const Vertex& v);

}  // namespace rnc
