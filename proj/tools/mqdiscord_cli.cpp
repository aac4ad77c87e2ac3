// mqdiscord: discord, concurrence and MQ coherence intensities of a
// dipolar-coupled spin-1/2 dimer.
//
// Exit status: 0 success, 1 usage or domain error, 2 verification failure,
// 3 I/O error.

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "mqdiscord/report.hpp"
#include "mqdiscord/verify.hpp"

namespace {

enum ExitCode { kOk = 0, kUsage = 1, kVerifyFailed = 2, kIo = 3 };

struct PointFlags {
  std::optional<double> beta, xi, g, coupling, tau;
  double delta = 1.0;
  double t = 0.0;

  void attach(CLI::App* app) {
    app->add_option("--beta", beta, "dimensionless inverse temperature (>= 0)");
    app->add_option("--xi", xi, "|cos(D tau)| in [0, 1]");
    app->add_option("--g", g, "second-order coherence intensity G");
    app->add_option("--coupling", coupling, "dipolar coupling D (with --tau)");
    app->add_option("--tau", tau, "preparation time (with --coupling)");
    app->add_option("--delta", delta, "evolution-period constant")->capture_default_str();
    app->add_option("--t", t, "evolution time")->capture_default_str();
  }

  mqd::PointInput input() const { return {beta, xi, g, coupling, tau, delta, t}; }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum discord, concurrence and MQ NMR coherence intensities of a spin dimer"};
  app.require_subcommand(1);

  std::string format = "csv";

  PointFlags point_flags;
  auto* point = app.add_subcommand("point", "evaluate every measure at one point");
  point_flags.attach(point);
  point->add_option("--format", format, "csv or json")->capture_default_str();

  PointFlags sweep_flags;
  std::vector<std::string> vars;
  std::vector<double> starts, stops;
  std::vector<int> counts;
  auto* sweep = app.add_subcommand("sweep", "evaluate on a one- or two-variable grid");
  sweep_flags.attach(sweep);
  sweep->add_option("--var", vars, "beta|xi|g|tau|t; comma-separate two for a 2-D grid")
      ->required()
      ->delimiter(',');
  sweep->add_option("--start", starts, "grid start(s)")->required()->delimiter(',');
  sweep->add_option("--stop", stops, "grid stop(s)")->required()->delimiter(',');
  sweep->add_option("--count", counts, "grid size(s), >= 2")->required()->delimiter(',');
  sweep->add_option("--format", format, "csv or json")->capture_default_str();

  std::string out_dir = "figures";
  auto* figures = app.add_subcommand("figures", "write the figure data sets and boundary values");
  figures->add_option("--out", out_dir, "output directory")->capture_default_str();

  std::optional<double> th_beta, th_g, th_xi;
  auto* thresholds = app.add_subcommand("thresholds", "bounds of the entangled region per slice");
  thresholds->add_option("--beta", th_beta, "fixed beta slice");
  thresholds->add_option("--g", th_g, "fixed G slice");
  thresholds->add_option("--xi", th_xi, "fixed xi slice");

  mqd::VerifyOptions vopts;
  auto* verify = app.add_subcommand("verify", "run the oracle and invariant suite");
  verify->add_option("--grid", vopts.grid, "points per axis (>= 4)")->capture_default_str();
  verify->add_option("--perturb", vopts.perturbation, "offset added to the closed-form discord")
      ->group("");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*point) {
      const auto fmt = mqd::parse_format(format);
      const auto rec = mqd::evaluate_point(mqd::resolve_point(point_flags.input()));
      mqd::write_records(std::cout, {rec}, fmt);
    } else if (*sweep) {
      const auto fmt = mqd::parse_format(format);
      if (vars.size() != starts.size() || vars.size() != stops.size() ||
          vars.size() != counts.size()) {
        throw mqd::UsageError("--var, --start, --stop and --count need the same number of values");
      }
      mqd::SweepSpec spec;
      spec.fixed = sweep_flags.input();
      for (std::size_t i = 0; i < vars.size(); ++i) {
        spec.axes.push_back({mqd::parse_sweep_variable(vars[i]), starts[i], stops[i], counts[i]});
      }
      mqd::write_records(std::cout, mqd::run_sweep(spec), fmt);
    } else if (*figures) {
      for (const auto& p : mqd::write_figures(out_dir)) std::cout << p.string() << '\n';
    } else if (*thresholds) {
      std::cout << mqd::thresholds_json(th_beta, th_g, th_xi);
    } else if (*verify) {
      const auto results = mqd::run_verification(vopts);
      for (const auto& r : results) {
        std::cout << (r.passed ? "PASS  " : "FAIL  ") << r.name << "  worst=" << mqd::format_number(r.worst)
                  << "  tol=" << mqd::format_number(r.tolerance) << '\n';
      }
      const bool ok = mqd::all_passed(results);
      std::cout << (ok ? "all checks passed" : "verification FAILED") << '\n';
      return ok ? kOk : kVerifyFailed;
    }
    std::cout.flush();
    if (!std::cout) return kIo;
  } catch (const mqd::IoError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kIo;
  } catch (const mqd::UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const mqd::DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}
