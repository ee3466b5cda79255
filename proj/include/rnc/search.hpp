#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "rnc/geometry.hpp"

namespace rnc {

// Everything in a record is recomputable from the vertex description (exponent
// set, or seed + index): records are certificates, not caches.
struct StratumRecord {
  int d = 0;
  std::vector<int> exponents;             // x-exponents, for monomial vertices
  std::optional<std::uint64_t> seed;      // for sampled vertices
  std::vector<std::string> basis;         // basis forms, printed
  NumericalType type;
  bool meets_curve = false;
  std::optional<SplittingType> tangent;   // absent when the vertex meets the curve
  std::optional<SplittingType> normal;    // also absent when the conservation sums
                                          // fail (non-ordinary singularities)
  std::string normal_error;               // the raw-profile diagnostic in that case
  std::optional<SmoothnessVerdict> smooth;
};

// Exact: always produce a verdict, falling back to resultant elimination.
// Cheap: only run the closed-form smoothness routes (monomial window,
// single-block secant test); otherwise leave the verdict absent. Batch
// sampling uses Cheap so one expensive elimination cannot dominate a sweep.
enum class SmoothPolicy { Exact, Cheap };

StratumRecord record_for(const Vertex& v, SmoothPolicy policy = SmoothPolicy::Exact);

// All C(d+1, dim_T) monomial vertices, exponent sets in lexicographic order.
std::vector<StratumRecord> enumerate_monomial(int d, int dim_T);

// Reproducible random vertices; each record carries the sub-seed it was built from.
std::vector<StratumRecord> sample_random(int d, int dim_T, int count, std::uint64_t seed);

struct WitnessPair {
  StratumRecord first, second;
};

// Searches the monomial enumeration (then random samples) for two vertices
// with the given normal splitting but different numerical types and different
// tangent splittings -- distinct strata with one normal bundle. The target is
// pre-screened against the conservation sums; absence is a valid answer.
std::optional<WitnessPair> find_reducibility_witness(int d, int dim_T,
                                                     const std::vector<int>& target_c);

}  // namespace rnc
