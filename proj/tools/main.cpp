#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "rnc/jobs.hpp"

namespace {

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

std::vector<int> split_ints(const std::string& s) {
  std::vector<int> out;
  for (const std::string& p : split_list(s)) out.push_back(std::stoi(p));
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact splitting types of tangent and normal bundles of rational curves "
               "presented as projections of the rational normal curve"};
  app.require_subcommand(1);

  rnc::JobSpec job;
  std::string forms_csv, duals_csv, target_csv, json_out;

  auto add_vertex_flags = [&](CLI::App* sub) {
    sub->add_option("--d", job.d, "degree of the curve / of the forms");
    sub->add_option("--forms", forms_csv, "comma-separated vertex generators, e.g. 'x^8*y^3,x^6*y^5'");
    sub->add_option("--dual-forms", duals_csv, "comma-separated parametrization components in u,v");
    sub->add_option("--json-out", json_out, "write the JSON report to this path");
  };

  const char* vertex_cmds[] = {"type",   "tangent",  "normal",   "profile", "oracle-check",
                               "smooth", "scroll",   "quadrics", "convert"};
  const char* vertex_desc[] = {
      "numerical type of the vertex",
      "splitting type of the restricted tangent bundle",
      "splitting type of the normal bundle with the section profile",
      "twisted section profiles of both bundles",
      "compare the kernel route with the direct-conditions oracle",
      "exact smoothness verdict for the projected curve",
      "scroll residency via the tangent splitting",
      "dimension of the space of quadrics through the curve",
      "convert between vertex generators and the dual parametrization"};
  std::vector<CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(vertex_cmds); ++i) {
    CLI::App* sub = app.add_subcommand(vertex_cmds[i], vertex_desc[i]);
    add_vertex_flags(sub);
    subs.push_back(sub);
  }
  subs[4]->add_option("--k-max", job.k_max, "highest twist level to compare");

  CLI::App* hil = app.add_subcommand("hilbert-dim",
                                     "stratum dimension from a family parameter count");
  hil->add_option("dim_vp", job.dim_vp, "parameter count of the vertex family")->required();
  hil->add_option("s", job.s_dim, "ambient projective dimension")->required();
  hil->add_option("--json-out", json_out, "write the JSON report to this path");

  CLI::App* enu = app.add_subcommand("enumerate", "all monomial vertices of a given dimension");
  enu->add_option("--d", job.d, "degree")->required();
  enu->add_option("--dim-t", job.dim_t, "vertex dimension")->required();
  enu->add_option("--json-out", json_out, "write the JSON report to this path");

  CLI::App* sw = app.add_subcommand("search-witness",
                                    "two strata with one normal splitting, if any");
  sw->add_option("--d", job.d, "degree")->required();
  sw->add_option("--dim-t", job.dim_t, "vertex dimension")->required();
  sw->add_option("--target-c", target_csv, "target twists, e.g. '2,2,1,1,0,0,0'")->required();
  sw->add_option("--seed", job.seed, "seed for the sampling fallback");
  sw->add_option("--json-out", json_out, "write the JSON report to this path");

  CLI::App* pe = app.add_subcommand("paper-example",
                                    "end-to-end reproduction of the reference example: two "
                                    "98-dimensional strata of degree-11 curves in P^8 with "
                                    "equal normal bundles");
  pe->add_option("--json-out", json_out, "write the JSON report to this path");

  CLI11_PARSE(app, argc, argv);

  job.command = app.get_subcommands().front()->get_name();
  if (!forms_csv.empty()) job.forms = split_list(forms_csv);
  if (!duals_csv.empty()) job.dual_forms = split_list(duals_csv);

  try {
    if (!target_csv.empty()) job.target_c = split_ints(target_csv);
    rnc::JobResult res = rnc::run_job(job);
    std::string text = res.report.dump(2) + "\n";
    if (json_out.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(json_out);
      out << text;
    }
    return res.checks_passed ? 0 : 3;
  } catch (const rnc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.kind() == rnc::Error::Kind::Input ? 2 : 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
