#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dirwell/certificates.hpp"
#include "dirwell/types.hpp"

namespace dirwell {

// One parsed invocation. seed, when set, overrides the document seed so a
// run can be replayed without editing the problem file.
struct RunConfig {
  std::string command;  // analyze | sweep | ekeland | vi | oracle
  std::string problem_path;
  std::vector<double> schedule = kDefaultSchedule;
  std::string output_dir = ".";
  std::optional<std::uint64_t> seed;
  std::string format = "json";  // "csv" additionally writes the plot files
};

// Exit codes: 0 positive verdict (well-posed / shrinks / verified), 2
// negative verdict, 3 inconclusive, 1 error (bad input, inapplicable
// family, failed precondition). Reports land in output_dir named after
// the problem file's stem; a short summary goes to stdout.
int cmd_analyze(const RunConfig& cfg);
int cmd_sweep(const RunConfig& cfg, const std::string& family);
int cmd_ekeland(const RunConfig& cfg, double epsilon, const std::optional<Vec>& x0);
int cmd_vi(const RunConfig& cfg);
int cmd_oracle(const RunConfig& cfg);

}  // namespace dirwell
