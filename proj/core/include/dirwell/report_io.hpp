#pragma once

#include <string>

#include "dirwell/certificates.hpp"
#include "dirwell/ekeland.hpp"
#include "dirwell/problem.hpp"
#include "dirwell/vi.hpp"

namespace dirwell {

// Shortest exact decimal for a double; "inf"/"-inf"/"nan" for the rest.
std::string format_double(double v);

// JSON report bodies. Every document carries the source name, seed,
// spacing, schedule, tolerances, and the sampled-window qualifier, so a
// report can be reproduced from its own header. Non-finite numbers
// serialize as null.
std::string report_to_json(const WellPosednessReport& r, const Problem& p);
std::string ekeland_to_json(const EkelandResult& r, const EkelandVerification& v, const Problem& p,
                            double spacing);
std::string vi_report_to_json(const VIReport& r, const VIProblem& vi);

// Plot-ready CSV: leading '#' comment lines with the same run parameters,
// then one row per grid value.
std::string sweep_to_csv(const SweepReport& s, const Problem& p, double spacing);
std::string profile_to_csv(const AdmissibleProfile& prof, const Problem& p, double spacing);
std::string vi_sweep_to_csv(const VIReport& r, const VIProblem& vi);

// The shared '#' comment block those CSVs start with; schedule may be null.
std::string csv_preamble(const std::string& title, const std::string& source, int dimension,
                         std::uint64_t seed, double spacing, const std::vector<double>* schedule);

}  // namespace dirwell
