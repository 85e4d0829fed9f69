#include "dirwell/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "dirwell/direction_set.hpp"
#include "dirwell/ekeland.hpp"
#include "dirwell/error.hpp"
#include "dirwell/oracle.hpp"
#include "dirwell/problem_io.hpp"
#include "dirwell/report_io.hpp"
#include "dirwell/rng.hpp"
#include "dirwell/sample_cloud.hpp"
#include "dirwell/vi.hpp"
#include "json_util.hpp"

namespace dirwell {

namespace {

namespace fs = std::filesystem;

constexpr int kOraclePairs = 200;
constexpr double kOraclePairTol = 1e-6;

std::string output_path(const RunConfig& cfg, const std::string& suffix) {
  const fs::path dir = cfg.output_dir.empty() ? fs::path(".") : fs::path(cfg.output_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) fail(Errc::io_error, "cannot create output directory " + dir.string());
  const std::string stem = fs::path(cfg.problem_path).stem().string();
  return (dir / (stem + suffix)).string();
}

Problem load_with_overrides(const RunConfig& cfg) {
  Problem p = load_problem(cfg.problem_path);
  if (cfg.seed.has_value()) p.seed = *cfg.seed;
  return p;
}

int verdict_exit(OverallVerdict v) {
  if (v == OverallVerdict::well_posed) return 0;
  if (v == OverallVerdict::not_well_posed) return 2;
  return 3;
}

int verdict_exit(SweepVerdict v) {
  if (v == SweepVerdict::shrinks) return 0;
  if (v == SweepVerdict::does_not_shrink) return 2;
  return 3;
}

int verdict_exit(ProfileVerdict v) {
  if (v == ProfileVerdict::admissible) return 0;
  if (v == ProfileVerdict::not_admissible) return 2;
  return 3;
}

std::string vec_str(const Vec& v) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i > 0) s += ", ";
    s += format_double(v[i]);
  }
  return s + "]";
}

template <typename Body>
int guarded(Body&& body) {
  try {
    return body();
  } catch (const Error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "internal error: %s\n", e.what());
    return 1;
  }
}

// Coarse per-axis grid step of the cloud (the ray samples only make the
// cloud denser), used for oracle comparison bounds.
double grid_step(const Problem& p) {
  const int m = p.dimension == 1
                    ? p.budget
                    : std::max(2, static_cast<int>(std::floor(std::pow(
                                      static_cast<double>(p.budget), 1.0 / p.dimension))));
  double step = 0.0;
  for (int j = 0; j < p.dimension; ++j)
    step = std::max(step, (p.box_hi[j] - p.box_lo[j]) / static_cast<double>(m - 1));
  return step;
}

}  // namespace

int cmd_analyze(const RunConfig& cfg) {
  return guarded([&] {
    const Problem p = load_with_overrides(cfg);
    const WellPosednessReport report = wellposedness_report(p, cfg.schedule);
    const std::string path = output_path(cfg, "_report.json");
    jsonio::write_file(path, report_to_json(report, p));
    if (cfg.format == "csv") {
      for (const FamilyOutcome& fo : report.families) {
        if (!fo.sweep.has_value()) continue;
        jsonio::write_file(output_path(cfg, "_" + family_name(fo.family) + "_sweep.csv"),
                           sweep_to_csv(*fo.sweep, p, report.spacing));
      }
      if (report.profile.has_value()) {
        jsonio::write_file(output_path(cfg, "_c0_profile.csv"),
                           profile_to_csv(*report.profile, p, report.spacing));
      }
    }

    std::printf("%s: dimension %d, budget %d, seed %llu\n", p.source.c_str(), p.dimension,
                p.budget, static_cast<unsigned long long>(p.seed));
    std::printf("spacing %s, schedule %s .. %s (%zu values)\n", format_double(report.spacing).c_str(),
                format_double(report.schedule.front()).c_str(),
                format_double(report.schedule.back()).c_str(), report.schedule.size());
    std::printf("hypotheses: convexity %s, subhomogeneity %s, anchor-is-argmin %s\n",
                report.convexity.pass ? "pass" : "fail",
                report.subhomogeneity.pass ? "pass" : "fail",
                report.anchor_is_argmin ? "yes" : "no");
    for (const FamilyOutcome& fo : report.families) {
      if (fo.sweep.has_value()) {
        std::printf("%s: %s (final diameter %s, floor %s)\n", family_name(fo.family).c_str(),
                    to_string(fo.sweep->verdict).c_str(),
                    format_double(fo.sweep->diameters.back()).c_str(),
                    format_double(fo.sweep->floor).c_str());
      } else {
        std::printf("%s: skipped (%s)\n", family_name(fo.family).c_str(), fo.reason.c_str());
      }
    }
    if (report.profile.has_value()) {
      std::printf("profile: %s (tau_adm %s)\n", to_string(report.profile->verdict).c_str(),
                  format_double(report.profile->tau_adm).c_str());
    }
    if (report.crosscheck.has_value()) {
      std::printf("crosscheck: %s\n", to_string(report.crosscheck->agreement).c_str());
    }
    std::printf("verdict: %s (%s)\n", to_string(report.overall).c_str(),
                report.window_note.c_str());
    std::printf("report: %s\n", path.c_str());
    return verdict_exit(report.overall);
  });
}

int cmd_sweep(const RunConfig& cfg, const std::string& family) {
  return guarded([&] {
    const Problem p = load_with_overrides(cfg);
    const SampleCloud cloud = sample_directional_region(p);

    if (family == "c0" || family == "c1") {
      const ProfileKind kind = family == "c0" ? ProfileKind::c0 : ProfileKind::c1;
      const AdmissibleProfile prof = c_profile(p, cloud, kind, kDefaultProfileGrid);
      const std::string path = output_path(cfg, "_" + family + "_profile.csv");
      jsonio::write_file(path, profile_to_csv(prof, p, cloud.spacing));
      std::printf("%s profile: %s (tau_adm %s)\n", family.c_str(),
                  to_string(prof.verdict).c_str(), format_double(prof.tau_adm).c_str());
      std::printf("csv: %s\n", path.c_str());
      return verdict_exit(prof.verdict);
    }

    const Family fam = parse_family(family);
    const SweepReport sweep = diameter_sweep(p, cloud, fam, cfg.schedule);
    const std::string path = output_path(cfg, "_" + family_name(fam) + "_sweep.csv");
    jsonio::write_file(path, sweep_to_csv(sweep, p, cloud.spacing));
    std::printf("%s: %s (final diameter %s, floor %s)\n", family_name(fam).c_str(),
                to_string(sweep.verdict).c_str(), format_double(sweep.diameters.back()).c_str(),
                format_double(sweep.floor).c_str());
    std::printf("csv: %s\n", path.c_str());
    return verdict_exit(sweep.verdict);
  });
}

int cmd_ekeland(const RunConfig& cfg, double epsilon, const std::optional<Vec>& x0) {
  return guarded([&] {
    const Problem p = load_with_overrides(cfg);
    if (x0.has_value() && x0->size() != p.dimension) {
      fail(Errc::dimension_mismatch, "x0 has wrong dimension");
    }
    const SampleCloud cloud = sample_directional_region(p);
    const EkelandResult result = x0.has_value() ? ekeland_point(p, cloud, *x0, epsilon)
                                                : ekeland_point(p, cloud, epsilon);
    const EkelandVerification ver = verify_ekeland(result, p, cloud);
    const std::string path = output_path(cfg, "_ekeland.json");
    jsonio::write_file(path, ekeland_to_json(result, ver, p, cloud.spacing));
    std::printf("x_eps = %s after %d iterations (epsilon %s, start %s)\n",
                vec_str(result.x_eps).c_str(), result.iterations, format_double(epsilon).c_str(),
                vec_str(result.start).c_str());
    std::printf("verification: %s (residuals %s, %s; conclusion-iii violations %d)\n",
                ver.pass ? "pass" : "fail", format_double(ver.residual_i).c_str(),
                format_double(ver.residual_ii).c_str(), ver.violations_iii);
    std::printf("report: %s\n", path.c_str());
    return ver.pass ? 0 : 2;
  });
}

int cmd_vi(const RunConfig& cfg) {
  return guarded([&] {
    VIProblem vi = load_vi_problem(cfg.problem_path);
    if (cfg.seed.has_value()) vi.base.seed = *cfg.seed;
    const VIReport report = vi_wellposedness_report(vi, cfg.schedule);
    const std::string path = output_path(cfg, "_vi.json");
    jsonio::write_file(path, vi_report_to_json(report, vi));
    if (cfg.format == "csv" && report.candidate_found) {
      jsonio::write_file(output_path(cfg, "_vi_sweep.csv"), vi_sweep_to_csv(report, vi));
    }
    std::printf("%s: dimension %d, seed %llu, spacing %s\n", vi.base.source.c_str(),
                vi.base.dimension, static_cast<unsigned long long>(vi.base.seed),
                format_double(report.spacing).c_str());
    std::printf("field: monotone %s, %s\n", report.monotone.pass ? "pass" : "fail",
                report.hemicontinuity.c_str());
    if (report.candidate_found) {
      std::printf("candidate %s, strong-set sweep %s\n", vec_str(report.candidate).c_str(),
                  to_string(report.rp_sweep.verdict).c_str());
    } else {
      std::printf("no candidate solves every scheduled approximate problem\n");
    }
    std::printf("solutions: %zu cluster(s), diameter %s, unique %s\n", report.cluster_count,
                format_double(report.cluster_diameter).c_str(),
                report.unique_solution ? "yes" : "no");
    if (!vi.base.g.has_value()) {
      std::printf("minty agreement: %s\n", format_double(report.minty_rate).c_str());
    }
    std::printf("verdict: %s (%s)\n", to_string(report.verdict).c_str(),
                report.window_note.c_str());
    std::printf("report: %s\n", path.c_str());
    return verdict_exit(report.verdict);
  });
}

int cmd_oracle(const RunConfig& cfg) {
  return guarded([&] {
    const Problem p = load_with_overrides(cfg);
    if (p.dimension > 3) {
      fail(Errc::precondition_violation, "oracle comparisons support dimensions 1 to 3");
    }
    const SampleCloud cloud = sample_directional_region(p);

    std::string csv = csv_preamble("oracle agreement", p.source, p.dimension, p.seed,
                                   cloud.spacing, nullptr);
    csv += "check,index,main_value,oracle_value,delta,bound,ok\n";
    bool all_ok = true;
    double worst_pair_delta = 0.0;
    int pair_mismatches = 0;

    auto rng = make_rng(p.seed, "oracle-pairs");
    for (int i = 0; i < kOraclePairs; ++i) {
      const Vec y = uniform_point(rng, p.box_lo, p.box_hi);
      const Vec x = uniform_point(rng, p.box_lo, p.box_hi);
      const ExtReal main = minimal_time(p.directions, y, x);
      const ExtReal ref = oracle_minimal_time(p.directions, y, x);
      double delta = 0.0;
      bool ok = true;
      if (main.is_finite() != ref.is_finite()) {
        ok = false;
        ++pair_mismatches;
        delta = std::numeric_limits<double>::infinity();
      } else if (main.is_finite()) {
        delta = std::abs(main.value() - ref.value());
        worst_pair_delta = std::max(worst_pair_delta, delta);
        ok = delta <= kOraclePairTol;
      }
      all_ok = all_ok && ok;
      csv += "minimal_time," + std::to_string(i) + "," + format_double(main.raw()) + "," +
             format_double(ref.raw()) + "," + format_double(delta) + "," +
             format_double(kOraclePairTol) + "," + (ok ? "1" : "0") + "\n";
    }

    int level_rows = 0;
    if (p.dimension <= 2) {
      const InfimumResult inf = cloud_infimum(cloud);
      std::vector<double> finite;
      for (double v : cloud.values) {
        if (std::isfinite(v)) finite.push_back(v);
      }
      std::sort(finite.begin(), finite.end());
      const double step = grid_step(p);
      const double fine = step / 10.0;
      const double bound = (p.dimension == 1 ? 2.0 : 2.0 * std::sqrt(2.0)) * (step + fine) + 1e-12;
      for (double q : {0.25, 0.5, 0.75}) {
        const double eps =
            finite[static_cast<std::size_t>(q * static_cast<double>(finite.size() - 1))] -
            inf.value;
        const double main = diameter_if(
            cloud, [&](std::size_t i) { return leq_tol(cloud.values[i], inf.value + eps); });
        const double ref = oracle_level_diameter(p, eps);
        const double delta = std::abs(main - ref);
        const bool ok = delta <= bound;
        all_ok = all_ok && ok;
        ++level_rows;
        csv += "level_diameter," + std::to_string(level_rows - 1) + "," + format_double(main) +
               "," + format_double(ref) + "," + format_double(delta) + "," +
               format_double(bound) + "," + (ok ? "1" : "0") + "\n";
      }
    }

    const std::string path = output_path(cfg, "_oracle.csv");
    jsonio::write_file(path, csv);
    std::printf("minimal-time pairs: %d, classification mismatches %d, worst finite delta %s\n",
                kOraclePairs, pair_mismatches, format_double(worst_pair_delta).c_str());
    if (level_rows > 0) std::printf("level-diameter checks: %d\n", level_rows);
    std::printf("agreement: %s\n", all_ok ? "ok" : "MISMATCH");
    std::printf("table: %s\n", path.c_str());
    return all_ok ? 0 : 2;
  });
}

}  // namespace dirwell
