#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "dirwell/commands.hpp"
#include "dirwell/types.hpp"

namespace {

dirwell::Vec to_vec(const std::vector<double>& xs) {
  dirwell::Vec v(static_cast<Eigen::Index>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i) v[static_cast<Eigen::Index>(i)] = xs[i];
  return v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Directional well-posedness diagnostics for minimization problems\n"
               "and variational inequalities over finitely generated direction cones."};
  app.require_subcommand(1);
  app.set_version_flag("--version", "dirwell 0.1.0");

  dirwell::RunConfig cfg;
  std::vector<double> schedule;
  std::vector<double> x0;
  double epsilon = 0.0;
  std::string family;

  const auto add_common = [&](CLI::App* sub, bool takes_schedule) {
    sub->add_option("--problem", cfg.problem_path, "problem document (JSON)")->required();
    if (takes_schedule) {
      sub->add_option("--schedule", schedule,
                      "comma-separated epsilon schedule, strictly decreasing, at least 4 values")
          ->delimiter(',');
    }
    sub->add_option("--out", cfg.output_dir, "output directory (default: current)");
    sub->add_option("--seed", cfg.seed, "override the document seed");
    sub->add_option("--format", cfg.format, "json writes reports only, csv adds plot files")
        ->check(CLI::IsMember({"json", "csv"}));
  };

  CLI::App* analyze = app.add_subcommand("analyze", "full well-posedness report");
  add_common(analyze, true);

  CLI::App* sweep = app.add_subcommand("sweep", "one certificate family or profile as CSV");
  add_common(sweep, true);
  sweep->add_option("--family", family, "one of L, G, Gp, H, Hp, P, Pp, Q, c0, c1")->required();

  CLI::App* ekeland = app.add_subcommand("ekeland", "variational-principle point with verification");
  add_common(ekeland, false);
  ekeland->add_option("--epsilon", epsilon, "epsilon of the approximate minimizer")->required();
  ekeland->add_option("--x0", x0, "start point, comma-separated (default: sampled argmin)")
      ->delimiter(',');

  CLI::App* vi = app.add_subcommand("vi", "variational-inequality well-posedness report");
  add_common(vi, true);

  CLI::App* oracle = app.add_subcommand("oracle", "agreement table against the reference scans");
  add_common(oracle, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  if (!schedule.empty()) cfg.schedule = schedule;

  if (analyze->parsed()) {
    cfg.command = "analyze";
    return dirwell::cmd_analyze(cfg);
  }
  if (sweep->parsed()) {
    cfg.command = "sweep";
    return dirwell::cmd_sweep(cfg, family);
  }
  if (ekeland->parsed()) {
    cfg.command = "ekeland";
    const std::optional<dirwell::Vec> start =
        x0.empty() ? std::nullopt : std::optional<dirwell::Vec>(to_vec(x0));
    return dirwell::cmd_ekeland(cfg, epsilon, start);
  }
  if (vi->parsed()) {
    cfg.command = "vi";
    return dirwell::cmd_vi(cfg);
  }
  cfg.command = "oracle";
  return dirwell::cmd_oracle(cfg);
}
