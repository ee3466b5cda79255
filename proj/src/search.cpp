#include "rnc/search.hpp"

#include <algorithm>
#include <random>

namespace rnc {

StratumRecord record_for(const Vertex& v, SmoothPolicy policy) {
  StratumRecord rec;
  rec.d = v.d;
  for (const BinaryForm& f : basis_forms(v)) rec.basis.push_back(form_str(f));
  rec.type = numerical_type(v);
  rec.meets_curve = rec.type.a >= 0;
  if (!rec.meets_curve && v.space.dim() >= 1) {
    rec.tangent = tangent_splitting(v);
    try {
      rec.normal = normal_splitting(v);
    } catch (const Error& e) {
      // a failed conservation check is a certificate of non-ordinary
      // singularities for an otherwise valid vertex; keep the diagnostic
      if (e.kind() != Error::Kind::Check) throw;
      rec.normal_error = e.what();
    }
    std::vector<int> nu;
    bool cheap_route = monomial_exponents(v, nu) || rec.type.b.size() == 1;
    if (policy == SmoothPolicy::Exact || cheap_route) rec.smooth = smoothness(v);
  }
  return rec;
}

std::vector<StratumRecord> enumerate_monomial(int d, int dim_T) {
  require_input(1 <= dim_T && dim_T <= d - 1, "enumerate_monomial: dim_T out of range");
  std::vector<StratumRecord> out;
  // lexicographic exponent subsets of {0..d}, as ascending index combinations
  std::vector<int> idx(dim_T);
  for (int i = 0; i < dim_T; ++i) idx[i] = i;
  while (true) {
    std::vector<BinaryForm> gens;
    std::vector<int> nu;
    for (int i : idx) {
      nu.push_back(i);
      gens.push_back(BinaryForm::monomial(d, d - i));  // x-exponent i
    }
    StratumRecord rec = record_for(make_vertex(d, gens), SmoothPolicy::Exact);
    rec.exponents = nu;
    out.push_back(std::move(rec));
    // next combination
    int pos = dim_T - 1;
    while (pos >= 0 && idx[pos] == d - (dim_T - 1 - pos)) --pos;
    if (pos < 0) break;
    ++idx[pos];
    for (int i = pos + 1; i < dim_T; ++i) idx[i] = idx[i - 1] + 1;
  }
  return out;
}

std::vector<StratumRecord> sample_random(int d, int dim_T, int count, std::uint64_t seed) {
  require_input(1 <= dim_T && dim_T <= d - 1, "sample_random: dim_T out of range");
  require_input(count >= 0, "sample_random: negative count");
  std::vector<StratumRecord> out;
  std::mt19937_64 master(seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  while (static_cast<int>(out.size()) < count) {
    std::uint64_t sub_seed = master();
    std::mt19937_64 rng(sub_seed);
    std::vector<BinaryForm> gens;
    for (int r = 0; r < dim_T; ++r) {
      BinaryForm f(d);
      for (int i = 0; i <= d; ++i) f.coeff(i) = coef(rng);
      gens.push_back(f);
    }
    Vertex v = make_vertex(d, gens);
    if (v.space.dim() != static_cast<std::size_t>(dim_T)) continue;
    StratumRecord rec = record_for(v, SmoothPolicy::Cheap);
    rec.seed = sub_seed;
    out.push_back(std::move(rec));
  }
  return out;
}

namespace {

bool screen_target(int d, int dim_T, const std::vector<int>& c) {
  const int e = dim_T - 1;
  const int s = d - e - 1;
  if (static_cast<int>(c.size()) != s - 1) return false;
  long sum = 0;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] < 0) return false;
    if (i > 0 && c[i] > c[i - 1]) return false;
    sum += c[i];
  }
  // both conservation sums reduce to the same condition given the length
  return sum == 2L * (e + 1);
}

std::optional<WitnessPair> scan_records(const std::vector<StratumRecord>& recs,
                                        const std::vector<int>& target) {
  // only smooth curves certify stratum membership: for a singular curve the
  // computed splitting is formal unless the singularities are ordinary, which
  // the record does not certify
  std::vector<const StratumRecord*> hits;
  for (const StratumRecord& r : recs)
    if (r.normal && r.normal->c == target && r.smooth &&
        r.smooth->status == Smoothness::Smooth)
      hits.push_back(&r);
  for (std::size_t i = 0; i < hits.size(); ++i)
    for (std::size_t j = i + 1; j < hits.size(); ++j)
      if (!(hits[i]->type == hits[j]->type) && hits[i]->tangent->c != hits[j]->tangent->c)
        return WitnessPair{*hits[i], *hits[j]};
  return std::nullopt;
}

}  // namespace

std::optional<WitnessPair> find_reducibility_witness(int d, int dim_T,
                                                     const std::vector<int>& target_c) {
  require_input(1 <= dim_T && dim_T <= d - 1, "find_reducibility_witness: dim_T out of range");
  if (!screen_target(d, dim_T, target_c)) return std::nullopt;
  std::vector<StratumRecord> recs = enumerate_monomial(d, dim_T);
  if (auto w = scan_records(recs, target_c)) return w;
  // randomized fallback; fixed seed keeps the search reproducible
  std::vector<StratumRecord> sampled = sample_random(d, dim_T, 128, 0x5eedu);
  recs.insert(recs.end(), sampled.begin(), sampled.end());
  return scan_records(recs, target_c);
}

}  // namespace rnc
