#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rnc/splitting.hpp"
#include "rnc/vertex.hpp"

namespace rnc {

enum class Smoothness { Smooth, Singular, Unknown };
enum class SmoothnessMethod { MonomialCriterion, TypeECatalecticant, ResultantElimination };

// Smooth / Singular are only returned when exactly certified; Unknown carries
// the diagnostic trail in `detail` (typically the unresolved eliminant factor).
struct SmoothnessVerdict {
  Smoothness status = Smoothness::Unknown;
  SmoothnessMethod method = SmoothnessMethod::ResultantElimination;
  // Parameter points (u:v) on the source line witnessing a singularity, when a
  // rational one was found: one point for a cusp-type collision, two for a
  // secant-type one.
  std::vector<std::pair<Scalar, Scalar>> witness;
  std::string detail;
};

// True iff the vertex contains a pure power, i.e. the projection has a base
// point: decided by the gcd of the dual basis forms.
bool meets_cd(const Vertex& v);

// [g] lies in the span of b+1 power sums (the b-th secant variety of the
// degree-n curve) iff the middle catalecticant has rank <= b+1.
bool secant_member(const BinaryForm& g, int b);

// Exact smoothness of the projected curve. Dispatch: monomial vertices by the
// exponent-window criterion, single-block vertices by the secant test on the
// recovered generator, everything else by resultant elimination on the
// collision equations. Requires meets_cd(v) == false.
SmoothnessVerdict smoothness(const Vertex& v);

// The general route, exposed so the specialized routes can be checked
// against it.
SmoothnessVerdict smoothness_by_elimination(const Vertex& v);

struct ScrollReport {
  bool on_scroll = false;
  int e = 0;
  std::optional<SplittingType> tangent;  // O(d+2+e) + O^{s-1}(d+1)
  std::optional<SplittingType> normal;   // O^2(d+e+3) + O^{s-3}(d+2)
  int scroll_degree = 0;                 // s - 1
  bool unique = false;
};

// A smooth curve lies on a smooth rational normal scroll iff its vertex has
// single-block type (e); then both bundles are forced and the scroll is unique.
ScrollReport scroll_detect(const Vertex& v);

// dim_VP + dim PGL(s+1) - 3.
long hilbert_dim(long dim_vp, int s);

// True when every basis row of the vertex is a single monomial; fills the
// x-exponents when so.
bool monomial_exponents(const Vertex& v, std::vector<int>& nu_out);

}  // namespace rnc
