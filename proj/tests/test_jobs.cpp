#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "rnc/jobs.hpp"

using namespace rnc;

namespace {

JobSpec vertex_job(const std::string& cmd, int d, std::vector<std::string> forms) {
  JobSpec j;
  j.command = cmd;
  j.d = d;
  j.forms = std::move(forms);
  return j;
}

bool has_check(const Json& report, const std::string& name, const std::string& status) {
  for (const auto& c : report["checks"])
    if (c["name"] == name && c["status"] == status) return true;
  return false;
}

}  // namespace

TEST_CASE("type command") {
  JobResult r = run_job(vertex_job("type", 5, {"x^4*y", "x*y^4"}));
  CHECK(r.checks_passed);
  CHECK(r.report["result"]["type"]["printed"] == "(0,0)");
  CHECK(r.report["result"]["type"]["a"] == -1);
}

TEST_CASE("convert command from the dual side") {
  JobSpec j;
  j.command = "convert";
  j.d = 5;
  j.dual_forms = {"u^5", "u^2*v^3", "u^3*v^2", "v^5"};
  JobResult r = run_job(j);
  CHECK(r.checks_passed);
  std::vector<std::string> forms = r.report["result"]["forms"];
  CHECK(forms == std::vector<std::string>{"x^4*y", "x*y^4"});
  CHECK(has_check(r.report, "round_trip", "pass"));
}

TEST_CASE("normal command on the reference vertex") {
  JobResult r = run_job(vertex_job("normal", 11, {"x^8*y^3", "x^6*y^5", "x^4*y^7"}));
  CHECK(r.checks_passed);
  CHECK(r.report["result"]["profile"]["values"] == Json::array({13, 6, 2, 0}));
  CHECK(r.report["result"]["normal"]["c"] == Json::array({2, 2, 1, 1, 0, 0, 0}));
  CHECK(r.report["result"]["normal"]["printed"] == "O^2(15) + O^2(14) + O^3(13)");
  CHECK(has_check(r.report, "degree_sum", "pass"));
  CHECK(has_check(r.report, "rank_sum", "pass"));
  CHECK(has_check(r.report, "closed_forms_match", "pass"));
  CHECK(has_check(r.report, "ordinary_singularities", "pass"));
  CHECK(r.report["result"]["smoothness"]["status"] == "smooth");
}

TEST_CASE("normal command on singular curves") {
  // cuspidal quintic: torsion sections keep the formal profile positive, the
  // conservation check fails, and the failure carries the raw profile
  try {
    run_job(vertex_job("normal", 5, {"x^4*y", "x*y^4"}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::Check);
    CHECK(std::string(e.what()).find("(6,4,2,2,2,2,2)") != std::string::npos);
  }
  // nodal sextic ((1:1) and (1:-1) collide): conservation holds, but the
  // verdict is singular, so the values are flagged as formal
  JobResult r = run_job(
      vertex_job("normal", 6, {"12*x^5*y + 40*x^3*y^3 + 12*x*y^5", "x^6 + y^6"}));
  CHECK(has_check(r.report, "ordinary_singularities", "warn"));
  CHECK(r.report["result"]["smoothness"]["status"] == "singular");
  CHECK(has_check(r.report, "degree_sum", "pass"));
}

TEST_CASE("tangent command on the second witness") {
  JobResult r = run_job(vertex_job("tangent", 11, {"x^3*y^8", "x^4*y^7", "x^7*y^4"}));
  CHECK(r.checks_passed);
  CHECK(r.report["result"]["tangent"]["printed"] == "O(14) + O(13) + O^6(12)");
  CHECK(has_check(r.report, "total_degree", "pass"));
}

TEST_CASE("oracle-check command") {
  JobSpec j = vertex_job("oracle-check", 11, {"x^8*y^3", "x^6*y^5", "x^4*y^7"});
  j.k_max = 4;
  JobResult r = run_job(j);
  CHECK(r.checks_passed);
  CHECK(r.report["result"]["values"].size() == 4);
  for (const auto& row : r.report["result"]["values"])
    CHECK(row["kernel_route"] == row["direct_conditions"]);
}

TEST_CASE("smooth, scroll, quadrics and hilbert-dim commands") {
  CHECK(run_job(vertex_job("smooth", 11, {"x^8*y^3", "x^6*y^5", "x^4*y^7"}))
            .report["result"]["smoothness"]["status"] == "smooth");

  JobResult q = run_job(vertex_job("quadrics", 5, {"x^4*y", "x*y^4"}));
  CHECK(q.report["result"]["quadrics"] == 1);

  JobSpec h;
  h.command = "hilbert-dim";
  h.dim_vp = 21;
  h.s_dim = 8;
  JobResult hr = run_job(h);
  CHECK(hr.report["result"]["dim"] == 98);
}

TEST_CASE("profile command reports raw values for singular curves") {
  JobResult r = run_job(vertex_job("profile", 5, {"x^4*y", "x*y^4"}));
  // cuspidal: the formal profile exists; whether it terminates is reported
  CHECK(r.report["result"].contains("normal_profile"));
  CHECK(r.report["result"].contains("tangent_profile"));
}

TEST_CASE("search-witness command") {
  JobSpec j;
  j.command = "search-witness";
  j.d = 11;
  j.dim_t = 3;
  j.target_c = {2, 2, 1, 1, 0, 0, 0};
  JobResult r = run_job(j);
  CHECK(r.checks_passed);
  CHECK(r.report["result"]["found"] == true);
  CHECK(has_check(r.report, "distinct_types", "pass"));
  CHECK(has_check(r.report, "distinct_tangent", "pass"));
  CHECK(has_check(r.report, "equal_normal", "pass"));
}

TEST_CASE("enumerate command") {
  JobSpec j;
  j.command = "enumerate";
  j.d = 5;
  j.dim_t = 2;
  JobResult r = run_job(j);
  CHECK(r.report["result"]["count"] == 15);
  CHECK(r.report["result"]["records"].size() == 15);
}

TEST_CASE("reports are byte-stable") {
  JobSpec j = vertex_job("normal", 11, {"x^8*y^3", "x^6*y^5", "x^4*y^7"});
  CHECK(run_job(j).report.dump(2) == run_job(j).report.dump(2));

  JobSpec s;
  s.command = "search-witness";
  s.d = 11;
  s.dim_t = 3;
  s.target_c = {2, 2, 1, 1, 0, 0, 0};
  CHECK(run_job(s).report.dump() == run_job(s).report.dump());
}

TEST_CASE("input validation") {
  CHECK_THROWS_AS(run_job(vertex_job("type", -1, {"x"})), Error);
  CHECK_THROWS_AS(run_job(vertex_job("no-such-command", 5, {"x^5"})), Error);
  // both representations given
  JobSpec j = vertex_job("type", 5, {"x^4*y"});
  j.dual_forms = {"u^5"};
  CHECK_THROWS_AS(run_job(j), Error);
  // neither given
  JobSpec k;
  k.command = "type";
  k.d = 5;
  CHECK_THROWS_AS(run_job(k), Error);
  // dependent generators
  CHECK_THROWS_AS(run_job(vertex_job("type", 5, {"x^4*y", "2*x^4*y"})), Error);
  // error kinds map to exit codes
  try {
    run_job(vertex_job("type", 3, {"x^2"}));
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == Error::Kind::Input);
  }
}

TEST_CASE("paper-example command reproduces the reference data") {
  JobSpec j;
  j.command = "paper-example";
  JobResult r = run_job(j);
  CHECK(r.checks_passed);
  CHECK(r.report["result"]["hilbert_dim"] == 98);
  CHECK(r.report["result"]["witness_B"]["profile"] == Json::array({13, 6, 2, 0}));
  CHECK(r.report["result"]["witness_A"]["type"]["printed"] == "(1,0)");
  CHECK(r.report["result"]["witness_pair"]["first"]["normal"]["c"] ==
        Json::array({2, 2, 1, 1, 0, 0, 0}));
}
