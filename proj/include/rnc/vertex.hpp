#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rnc/binary_form.hpp"
#include "rnc/subspace.hpp"

namespace rnc {

// Projection vertex: a subspace T of the degree-d forms, in coefficient
// coordinates (ambient dimension d+1).
struct Vertex {
  int d = 0;
  LinSubspace space;

  std::size_t dim() const { return space.dim(); }
  friend bool operator==(const Vertex& a, const Vertex& b) = default;
};

// The invariant (a; b_1 >= ... >= b_r) of a vertex: a+1 is the dimension of its
// curve-generated part, the b_i the derivative-block sizes of the remaining
// generators.
struct NumericalType {
  int a = -1;
  std::vector<int> b;  // non-increasing, entries >= 0

  int r() const { return static_cast<int>(b.size()); }
  std::string str() const;
  friend bool operator==(const NumericalType& x, const NumericalType& y) = default;
};

Vertex make_vertex(int d, const std::vector<BinaryForm>& gens);
std::vector<BinaryForm> basis_forms(const Vertex& v);

// Span of the derivative images: dT = d_x T + d_y T, one degree down.
Vertex partial(const Vertex& v);
// Intersection of the two derivative preimages, one degree up.
Vertex partial_inverse(const Vertex& v);
// Span of the b+1 iterated derivatives of g; degree drops by b. b = -1 gives 0.
Vertex partial_span(const BinaryForm& g, int b);

// Computed from the dimension profile of iterated partial_inverse; also
// cross-checks r against dim dT - dim T and throws on inconsistency.
NumericalType numerical_type(const Vertex& v);

// The curve-generated part S_T, computed by applying partial J times to the
// stabilized iterated preimage; dim = a+1.
Vertex cd_generated_part(const Vertex& v);

// a >= -1, b_i >= 0 non-increasing, and a+1 + sum(b_i + 2) <= d.
bool validate_type(const NumericalType& nt, int d);

// Randomized certified constructor: pure powers for the curve-generated part,
// derivative blocks of forms with large enough middle catalecticant rank for
// the rest; post-verifies the type and retries on bad luck.
Vertex make_vertex_of_type(const NumericalType& nt, int d, std::uint64_t seed);

// Substitution action of an invertible 2x2 matrix on the monomial basis:
// x -> m00 x + m10 y, y -> m01 x + m11 y applied inside every basis form.
Vertex apply_gl2(const Vertex& v, const Scalar& m00, const Scalar& m01, const Scalar& m10,
                 const Scalar& m11);

// Annihilator of T under the contraction pairing, as degree-d dual forms.
// For dim T = e+1 this is the s+1 = d-e dimensional space cutting out the
// curve's parametrization.
std::vector<DualForm> dual_basis(const Vertex& v);

// Inverse direction: the vertex annihilated by the given independent dual forms.
Vertex vertex_from_dual(int d, const std::vector<DualForm>& gens);

}  // namespace rnc
