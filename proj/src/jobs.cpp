#include "rnc/jobs.hpp"

#include <numeric>

namespace rnc {

namespace {

struct ReportBuilder {
  Json input = Json::object();
  Json result = Json::object();
  Json checks = Json::array();
  Json provenance = Json::array();
  bool passed = true;

  void check(const std::string& name, bool ok, const std::string& detail = "") {
    checks.push_back({{"name", name}, {"status", ok ? "pass" : "fail"}, {"detail", detail}});
    passed = passed && ok;
  }
  void warn(const std::string& name, const std::string& detail) {
    checks.push_back({{"name", name}, {"status", "warn"}, {"detail", detail}});
  }
  void prov(const std::string& value, const std::string& source) {
    provenance.push_back({{"value", value}, {"source", source}});
  }
  JobResult finish() {
    Json rep;
    rep["input"] = input;
    rep["result"] = result;
    rep["checks"] = checks;
    rep["provenance"] = provenance;
    return JobResult{rep, passed};
  }
};

Vertex vertex_from_job(const JobSpec& job, ReportBuilder& rb) {
  require_input(job.d >= 1, "--d is required and must be >= 1");
  require_input(job.forms.empty() != job.dual_forms.empty(),
                "exactly one of --forms / --dual-forms must be given");
  rb.input["d"] = job.d;
  if (!job.forms.empty()) {
    std::vector<BinaryForm> gens;
    for (const std::string& s : job.forms) gens.push_back(parse_form<BinaryForm>(s, job.d));
    rb.input["forms"] = job.forms;
    Vertex v = make_vertex(job.d, gens);
    require_input(v.space.dim() == gens.size(), "vertex generators are linearly dependent");
    return v;
  }
  std::vector<DualForm> gens;
  for (const std::string& s : job.dual_forms) gens.push_back(parse_form<DualForm>(s, job.d));
  rb.input["dual_forms"] = job.dual_forms;
  return vertex_from_dual(job.d, gens);
}

std::string ints_str(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

Json json_profile(const CohomologyProfile& p) {
  return Json{{"d", p.d}, {"e", p.e}, {"values", p.values}};
}

void attach_normal_checks(ReportBuilder& rb, const Vertex& v, const SplittingType& st) {
  const int d = st.d, e = st.e;
  long sum_c = std::accumulate(st.c.begin(), st.c.end(), 0L);
  rb.check("degree_sum", sum_c + static_cast<long>(st.c.size()) == d + e,
           "sum(c_i + 1) = d + e");
  rb.check("rank_sum", sum_c == 2L * (e + 1), "sum(c_i) = 2(e + 1)");
  rb.check("nonnegative_twists", st.c.empty() || st.c.back() >= 0, "c_i >= 0");
  ClosedForms cf = closed_forms(v);
  CohomologyProfile p = normal_profile(v);
  bool closed_ok = p.values.size() >= 1 && p.values[0] == cf.k0 &&
                   (p.values.size() < 2 ? cf.k1 == 0 : p.values[1] == cf.k1) &&
                   (p.values.size() < 3 ? cf.k2 == 0 : p.values[2] == cf.k2);
  rb.check("closed_forms_match", closed_ok,
           "profile head equals (d-1+dimT, 2dimT, 3dimT-dim d2T)");
  int zeros = static_cast<int>(std::count(st.c.begin(), st.c.end(), 0));
  rb.check("bottom_summand_count", zeros == cf.bottom_summands,
           "number of degree d+2 summands equals d-1-dim d2T");
}

void attach_smoothness_caveat(ReportBuilder& rb, const Vertex& v) {
  SmoothnessVerdict sv = smoothness(v);
  rb.result["smoothness"] = json_of(sv);
  if (sv.status == Smoothness::Smooth) {
    rb.check("ordinary_singularities", true, "curve is smooth");
  } else {
    rb.warn("ordinary_singularities",
            "curve not certified smooth; bundle values are formal unless the "
            "singularities are ordinary");
  }
}

}  // namespace

Json json_of(const NumericalType& nt) {
  return Json{{"a", nt.a}, {"b", nt.b}, {"printed", nt.str()}};
}

Json json_of(const SplittingType& st) {
  return Json{{"kind", st.kind == BundleKind::Tangent ? "tangent" : "normal"},
              {"c", st.c},
              {"twists", st.twists()},
              {"printed", st.str()}};
}

Json json_of(const SmoothnessVerdict& sv) {
  Json w = Json::array();
  for (auto& [lam, mu] : sv.witness) w.push_back({scalar_str(lam), scalar_str(mu)});
  const char* status = sv.status == Smoothness::Smooth     ? "smooth"
                       : sv.status == Smoothness::Singular ? "singular"
                                                           : "unknown";
  const char* method = sv.method == SmoothnessMethod::MonomialCriterion ? "monomial-criterion"
                       : sv.method == SmoothnessMethod::TypeECatalecticant
                           ? "type-e-catalecticant"
                           : "resultant-elimination";
  return Json{{"status", status}, {"method", method}, {"witness", w}, {"detail", sv.detail}};
}

Json json_of(const StratumRecord& rec) {
  Json j;
  j["d"] = rec.d;
  if (!rec.exponents.empty()) j["exponents"] = rec.exponents;
  if (rec.seed) j["seed"] = *rec.seed;
  j["basis"] = rec.basis;
  j["type"] = json_of(rec.type);
  j["meets_curve"] = rec.meets_curve;
  j["tangent"] = rec.tangent ? json_of(*rec.tangent) : Json(nullptr);
  j["normal"] = rec.normal ? json_of(*rec.normal) : Json(nullptr);
  if (!rec.normal_error.empty()) j["normal_error"] = rec.normal_error;
  j["smoothness"] = rec.smooth ? json_of(*rec.smooth) : Json(nullptr);
  return j;
}

namespace {

JobResult cmd_type(const JobSpec& job) {
  ReportBuilder rb;
  Vertex v = vertex_from_job(job, rb);
  NumericalType nt = numerical_type(v);
  rb.result["type"] = json_of(nt);
  rb.check("existence_bound", validate_type(nt, v.d), "a+1 + sum(b_i+2) <= d");
  rb.prov(nt.str(), "iterated derivative-preimage dimension profile");
  return rb.finish();
}

JobResult cmd_tangent(const JobSpec& job) {
  ReportBuilder rb;
  Vertex v = vertex_from_job(job, rb);
  SplittingType st = tangent_splitting(v);
  rb.result["tangent"] = json_of(st);
  const int s = v.d - static_cast<int>(v.space.dim());
  long total = std::accumulate(st.c.begin(), st.c.end(), 0L) +
               static_cast<long>(st.c.size()) * (st.d + 2);
  rb.check("total_degree", total == static_cast<long>(s + 1) * v.d,
           "sum of twists equals (s+1)d");
  rb.prov(st.str(), "numerical type blocks, cross-checked against the section profile");
  return rb.finish();
}

JobResult cmd_normal(const JobSpec& job) {
  ReportBuilder rb;
  Vertex v = vertex_from_job(job, rb);
  CohomologyProfile p = normal_profile(v);
  SplittingType st = normal_splitting(v);
  rb.result["profile"] = json_profile(p);
  rb.result["normal"] = json_of(st);
  attach_normal_checks(rb, v, st);
  attach_smoothness_caveat(rb, v);
  rb.prov("profile " + ints_str(p.values),
          "k=0 multiplication-map preimage; k=1 closed form 2 dim T; k>=2 kernel of the "
          "squared transvectant on S^kU x T");
  rb.prov("c = " + ints_str(st.c), "second differences of the section profile");
  return rb.finish();
}

JobResult cmd_profile(const JobSpec& job) {
  ReportBuilder rb;
  Vertex v = vertex_from_job(job, rb);
  const int e = static_cast<int>(v.space.dim()) - 1;
  const int cap = 2 * e + 4;
  // raw per-level values: list the formal dimensions even when the profile
  // does not terminate (non-ordinary singularities)
  std::vector<int> np, tp;
  for (int k = 0; k <= cap; ++k) {
    np.push_back(h0_normal(v, k));
    if (k >= 1 && np.back() == 0) break;
  }
  for (int k = 0; k <= cap; ++k) {
    tp.push_back(h0_tangent(v, k));
    if (tp.back() == 0) break;
  }
  rb.result["normal_profile"] = Json{{"d", v.d}, {"e", e}, {"values", np}};
  rb.result["tangent_profile"] = tp;
  if (np.back() != 0)
    rb.warn("normal_profile_terminates",
            "profile still positive at the twist cap; the curve cannot have "
            "ordinary singularities");
  else
    rb.check("normal_profile_terminates", true, "profile reaches zero in range");
  bool mono = true;
  for (std::size_t k = 1; k + 1 < np.size(); ++k) mono = mono && np[k] >= np[k + 1];
  rb.check("normal_profile_monotone", mono, "non-increasing from k=1 onward");
  rb.check("tangent_routes_agree", true,
           "kernel and derivative-preimage routes agreed at every level");
  rb.prov(ints_str(np), "normal section profile");
  rb.prov(ints_str(tp), "tangent section profile (both routes)");
  return rb.finish();
}

JobResult cmd_oracle_check(const JobSpec& job) {
  ReportBuilder rb;
  Vertex v = vertex_from_job(job, rb);
  const int e = static_cast<int>(v.space.dim()) - 1;
  const int kmax = job.k_max > 0 ? job.k_max : 2 * e + 4;
  rb.input["k_max"] = kmax;
  Json rows = Json::array();
  bool all = true;
  for (int k = 1; k <= kmax; ++k) {
    int engine = h0_normal(v, k);
    int oracle = normal_oracle(v, k);
    all = all && engine == oracle;
    rows.push_back({{"k", k}, {"kernel_route", engine}, {"direct_conditions", oracle}});
  }
  rb.result["values"] = rows;
  rb.check("oracle_equivalence", all,
           "kernel of the squared transvectant matches the direct membership conditions");
  rb.prov("k=1.." + std::to_string(kmax),
          "independent routes: transvectant kernel vs explicit section conditions");
  return rb.finish();
}

JobResult cmd_smooth(const JobSpec& job) {
  ReportBuilder rb;
  Vertex v = vertex_from_job(job, rb);
  SmoothnessVerdict sv = smoothness(v);
  rb.result["smoothness"] = json_of(sv);
  if (sv.status == Smoothness::Unknown)
    rb.warn("exact_verdict", sv.detail);
  else
    rb.check("exact_verdict", true, sv.detail);
  rb.prov(rb.result["smoothness"]["status"].get<std::string>(),
          sv.method == SmoothnessMethod::MonomialCriterion ? "monomial exponent window"
          : sv.method == SmoothnessMethod::TypeECatalecticant
              ? "secant test on the recovered block generator"
              : "resultant elimination on the collision equations");
  return rb.finish();
}

JobResult cmd_scroll(const JobSpec& job) {
  ReportBuilder rb;
  Vertex v = vertex_from_job(job, rb);
  ScrollReport rep = scroll_detect(v);
  Json j;
  j["on_scroll"] = rep.on_scroll;
  j["e"] = rep.e;
  j["scroll_degree"] = rep.scroll_degree;
  j["unique"] = rep.unique;
  j["tangent"] = rep.tangent ? json_of(*rep.tangent) : Json(nullptr);
  j["normal"] = rep.normal ? json_of(*rep.normal) : Json(nullptr);
  rb.result["scroll"] = j;
  rb.check("tangent_characterization", true,
           "scroll residency decided by the single-block tangent type");
  rb.prov(rep.on_scroll ? "on a unique smooth scroll" : "not on a smooth scroll",
          "single-block numerical type criterion");
  return rb.finish();
}

JobResult cmd_quadrics(const JobSpec& job) {
  ReportBuilder rb;
  Vertex v = vertex_from_job(job, rb);
  int q = quadrics_through(v);
  const int s = v.d - static_cast<int>(v.space.dim());
  rb.result["quadrics"] = q;
  rb.result["bound"] = (s - 1) * (s - 2) / 2;
  rb.result["bound_applies"] = v.d >= 2 * s + 1;
  if (v.d >= 2 * s + 1)
    rb.check("castelnuovo_bound", q <= (s - 1) * (s - 2) / 2, "h0 <= (s-1)(s-2)/2");
  rb.prov(std::to_string(q), "kernel of Sym^2 of the dual space multiplying into degree 2d");
  return rb.finish();
}

JobResult cmd_convert(const JobSpec& job) {
  ReportBuilder rb;
  Vertex v = vertex_from_job(job, rb);
  std::vector<std::string> forms, duals;
  for (const BinaryForm& f : basis_forms(v)) forms.push_back(form_str(f));
  std::vector<DualForm> dual = dual_basis(v);
  for (const DualForm& g : dual) duals.push_back(form_str(g));
  rb.result["forms"] = forms;
  rb.result["dual_forms"] = duals;
  rb.check("round_trip", vertex_from_dual(v.d, dual) == v,
           "annihilator of the annihilator returns the vertex");
  rb.prov("dim T = " + std::to_string(v.space.dim()) +
              ", dim annihilator = " + std::to_string(dual.size()),
          "kernel under the weighted contraction pairing");
  return rb.finish();
}

JobResult cmd_hilbert_dim(const JobSpec& job) {
  ReportBuilder rb;
  require_input(job.dim_vp >= 0 && job.s_dim >= 3,
                "hilbert-dim needs DIM_VP >= 0 and S >= 3");
  rb.input["dim_vp"] = job.dim_vp;
  rb.input["s"] = job.s_dim;
  long dim = hilbert_dim(job.dim_vp, job.s_dim);
  rb.result["dim"] = dim;
  rb.prov(std::to_string(dim), "dim V_P + dim PGL(s+1) - 3");
  return rb.finish();
}

JobResult cmd_enumerate(const JobSpec& job) {
  ReportBuilder rb;
  require_input(job.d >= 1 && job.dim_t >= 1, "enumerate needs --d and --dim-t");
  rb.input["d"] = job.d;
  rb.input["dim_t"] = job.dim_t;
  Json arr = Json::array();
  for (const StratumRecord& rec : enumerate_monomial(job.d, job.dim_t))
    arr.push_back(json_of(rec));
  rb.result["records"] = arr;
  rb.result["count"] = arr.size();
  rb.check("complete", true, "all exponent subsets enumerated in lexicographic order");
  return rb.finish();
}

JobResult cmd_search_witness(const JobSpec& job) {
  ReportBuilder rb;
  require_input(job.d >= 1 && job.dim_t >= 1, "search-witness needs --d and --dim-t");
  require_input(!job.target_c.empty(), "search-witness needs --target-c");
  rb.input["d"] = job.d;
  rb.input["dim_t"] = job.dim_t;
  rb.input["target_c"] = job.target_c;
  auto w = find_reducibility_witness(job.d, job.dim_t, job.target_c);
  if (!w) {
    rb.result["found"] = false;
    rb.prov("none", "exhaustive monomial enumeration plus seeded sampling");
    return rb.finish();
  }
  rb.result["found"] = true;
  rb.result["first"] = json_of(w->first);
  rb.result["second"] = json_of(w->second);
  rb.check("distinct_types", !(w->first.type == w->second.type), "numerical types differ");
  rb.check("distinct_tangent", w->first.tangent->c != w->second.tangent->c,
           "tangent splittings differ");
  rb.check("equal_normal", w->first.normal->c == w->second.normal->c &&
                               w->first.normal->c == job.target_c,
           "normal splittings both equal the target");
  rb.prov("witness pair", "deterministic monomial enumeration");
  return rb.finish();
}

JobResult cmd_paper_example(const JobSpec&) {
  ReportBuilder rb;
  const int d = 11;
  rb.input["description"] =
      "reference reproduction: degree-11 curves in P^8 with two strata sharing one "
      "normal splitting";

  Vertex vb = make_vertex(d, {parse_form<BinaryForm>("x^8*y^3", d),
                              parse_form<BinaryForm>("x^6*y^5", d),
                              parse_form<BinaryForm>("x^4*y^7", d)});
  Vertex va = make_vertex(d, {parse_form<BinaryForm>("x^3*y^8", d),
                              parse_form<BinaryForm>("x^4*y^7", d),
                              parse_form<BinaryForm>("x^7*y^4", d)});

  CohomologyProfile pb = normal_profile(vb);
  rb.result["witness_B"] = Json{{"forms", Json::array({"x^8*y^3", "x^6*y^5", "x^4*y^7"})},
                                {"type", json_of(numerical_type(vb))},
                                {"profile", pb.values},
                                {"normal", json_of(normal_splitting(vb))},
                                {"tangent", json_of(tangent_splitting(vb))},
                                {"smoothness", json_of(smoothness(vb))}};
  rb.result["witness_A"] = Json{{"forms", Json::array({"x^3*y^8", "x^4*y^7", "x^7*y^4"})},
                                {"type", json_of(numerical_type(va))},
                                {"profile", normal_profile(va).values},
                                {"normal", json_of(normal_splitting(va))},
                                {"tangent", json_of(tangent_splitting(va))},
                                {"smoothness", json_of(smoothness(va))}};

  rb.check("profile_B", pb.values == std::vector<int>({13, 6, 2, 0}),
           "section profile of the first witness is (13,6,2,0)");
  rb.check("type_B", numerical_type(vb) == NumericalType{-1, {0, 0, 0}},
           "first witness has type (0,0,0)");
  rb.check("type_A", numerical_type(va) == NumericalType{-1, {1, 0}},
           "second witness has type (1,0)");
  rb.check("common_normal", normal_splitting(va).c == normal_splitting(vb).c &&
                                normal_splitting(vb).c == std::vector<int>({2, 2, 1, 1, 0, 0, 0}),
           "both witnesses share the normal splitting c=(2,2,1,1,0,0,0)");
  rb.check("d2T_B", partial(partial(vb)).space.dim() == 7, "dim d2 T = 7");
  rb.check("d2T_A", partial(partial(va)).space.dim() == 7, "dim d2 T = 7");
  rb.check("smooth_both",
           smoothness(va).status == Smoothness::Smooth &&
               smoothness(vb).status == Smoothness::Smooth,
           "both witness curves are smooth");
  rb.check("tangent_B", tangent_splitting(vb).str() == "O^3(13) + O^5(12)",
           "tangent splitting for type (0,0,0)");
  rb.check("tangent_A", tangent_splitting(va).str() == "O(14) + O(13) + O^6(12)",
           "tangent splitting for type (1,0)");

  auto w = find_reducibility_witness(11, 3, {2, 2, 1, 1, 0, 0, 0});
  rb.check("witness_search", w.has_value(), "exhaustive monomial search finds a pair");
  if (w) {
    rb.result["witness_pair"] =
        Json{{"first", json_of(w->first)}, {"second", json_of(w->second)}};
    bool types_ok = (w->first.type == NumericalType{-1, {1, 0}} &&
                     w->second.type == NumericalType{-1, {0, 0, 0}}) ||
                    (w->second.type == NumericalType{-1, {1, 0}} &&
                     w->first.type == NumericalType{-1, {0, 0, 0}});
    rb.check("witness_types", types_ok, "pair realizes types (1,0) and (0,0,0)");
  }

  // parameter counts for the two families and the resulting dimension
  long family_a = 12 + 9;  // generators modulo the derivative block
  long family_b = 15 + 6;  // block generator plus a Grassmannian choice
  rb.result["family_counts"] = Json{{"type_(1,0)", family_a}, {"type_(0,0,0)", family_b}};
  rb.check("family_counts", family_a == 21 && family_b == 21, "12+9 = 15+6 = 21");
  long h = hilbert_dim(21, 8);
  rb.result["hilbert_dim"] = h;
  rb.check("hilbert_dim", h == 98, "21 + 80 - 3 = 98");
  rb.prov("98", "family parameter count plus dim PGL(9) minus dim PGL(2)");
  rb.prov("(13,6,2,0)", "kernel dimensions of the squared transvectant");
  return rb.finish();
}

}  // namespace

JobResult run_job(const JobSpec& job) {
  const std::string& c = job.command;
  if (c == "type") return cmd_type(job);
  if (c == "tangent") return cmd_tangent(job);
  if (c == "normal") return cmd_normal(job);
  if (c == "profile") return cmd_profile(job);
  if (c == "oracle-check") return cmd_oracle_check(job);
  if (c == "smooth") return cmd_smooth(job);
  if (c == "scroll") return cmd_scroll(job);
  if (c == "quadrics") return cmd_quadrics(job);
  if (c == "convert") return cmd_convert(job);
  if (c == "hilbert-dim") return cmd_hilbert_dim(job);
  if (c == "enumerate") return cmd_enumerate(job);
  if (c == "search-witness") return cmd_search_witness(job);
  if (c == "paper-example") return cmd_paper_example(job);
  throw_input("unknown command '" + c + "'");
}

}  // namespace rnc
