#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "rnc/search.hpp"

namespace rnc {

using Json = nlohmann::ordered_json;

// One CLI invocation. Exactly one of forms / dual_forms describes the curve
// for the vertex-based commands; the remaining fields are per-command options.
struct JobSpec {
  std::string command;
  int d = -1;
  std::vector<std::string> forms;       // vertex generators, expression strings
  std::vector<std::string> dual_forms;  // parametrization components
  int k_max = -1;                       // -1: command default
  std::uint64_t seed = 1;
  std::vector<int> target_c;
  int dim_t = -1;
  int count = 50;
  long dim_vp = -1;
  int s_dim = -1;
};

struct JobResult {
  Json report;
  bool checks_passed = true;
};

// Dispatches to the library modules and assembles the report:
// {"input":…, "result":…, "checks":[{"name","status","detail"}],
//  "provenance":[{"value","source"}]}. Input errors throw; check failures are
// recorded in the report with checks_passed = false.
JobResult run_job(const JobSpec& job);

// Serialization helpers shared with the tests.
Json json_of(const NumericalType& nt);
Json json_of(const SplittingType& st);
Json json_of(const SmoothnessVerdict& sv);
Json json_of(const StratumRecord& rec);

}  // namespace rnc
