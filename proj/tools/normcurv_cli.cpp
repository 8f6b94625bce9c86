// Command-line front end: verification suites, geodesic dumps and torus
// weight optimization.
//
// Exit status: 0 when every claim passes, 1 when a claim fails, 2 on usage,
// configuration or input errors.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "normcurv/config.hpp"
#include "normcurv/flat_torus.hpp"
#include "normcurv/manifold.hpp"
#include "normcurv/report.hpp"
#include "normcurv/suites.hpp"
#include "normcurv/veronese.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

int emit(const normcurv::VerificationReport& report, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    normcurv::write_report(std::cout, report);
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "error: cannot write '" << out_path << "'\n";
      return kExitUsage;
    }
    normcurv::write_report(out, report);
    std::cerr << "wrote " << out_path << '\n';
  }
  std::cerr << report.suite << ": " << (report.all_pass() ? "pass" : "FAIL") << '\n';
  return report.all_pass() ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"normcurv: normal curvature checks for projective planes, flat tori and curves"};
  app.require_subcommand(1);

  // verify
  std::string suite_name;
  std::string config_path;
  std::string report_path;
  std::uint64_t seed = 0;
  bool parallel = false;
  bool timing = false;
  auto* verify = app.add_subcommand("verify", "run a verification suite and write a report");
  verify->add_option("suite", suite_name, "veronese, rigidity, torus, curves or all")->required();
  verify->add_option("--config", config_path, "key = value settings file");
  verify->add_option("--out", report_path, "report path (default: stdout)");
  verify->add_option("--seed", seed, "random seed")->capture_default_str();
  verify->add_flag("--parallel", parallel, "run the suites of 'all' concurrently");
  verify->add_flag("--timing", timing, "include runtime_seconds in the report");

  // dump-geodesic
  std::string space_name;
  double length = 3.141592653589793;
  double step = 1e-3;
  std::string csv_path;
  std::uint64_t dump_seed = 0;
  auto* dump = app.add_subcommand("dump-geodesic", "integrate one geodesic and write it as CSV");
  dump->add_option("space", space_name, "RP2, CP2, HP2, OP2, RP3, ...")->required();
  dump->add_option("--length", length, "arc length")->capture_default_str();
  dump->add_option("--step", step, "integrator step")->capture_default_str();
  dump->add_option("--out", csv_path, "CSV path")->required();
  dump->add_option("--seed", dump_seed, "random seed")->capture_default_str();

  // torus optimize
  std::string freqs_path;
  std::string torus_out;
  normcurv::OptimizeOptions opt;
  auto* torus = app.add_subcommand("torus", "flat torus tools");
  torus->require_subcommand(1);
  auto* optimize = torus->add_subcommand("optimize", "optimize weights for a frequency family");
  optimize->add_option("--freqs", freqs_path, "lines 'k1 ... kn w'")->required();
  optimize->add_option("--out", torus_out, "report path (default: stdout)");
  optimize->add_option("--budget", opt.budget, "objective evaluations")->capture_default_str();
  optimize->add_option("--seed", opt.seed, "random seed")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) {
      const normcurv::SuiteName name = normcurv::parse_suite_name(suite_name);
      const normcurv::SuiteConfig config =
          config_path.empty() ? normcurv::SuiteConfig{} : normcurv::SuiteConfig::load_file(config_path);
      const auto t0 = std::chrono::steady_clock::now();
      normcurv::VerificationReport report = normcurv::run_suite(name, config, seed, parallel);
      if (timing) {
        report.runtime_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      }
      return emit(report, report_path);
    }

    if (*dump) {
      if (!(length >= 0.0) || !(step > 0.0)) {
        std::cerr << "error: --length must be non-negative and --step positive\n";
        return kExitUsage;
      }
      const normcurv::VeroneseSpace space = normcurv::VeroneseSpace::parse(space_name);
      const normcurv::ImplicitManifold m = normcurv::projection_variety(space);
      const normcurv::GeodesicRun run = normcurv::sample_geodesic(space, length, step, dump_seed);
      std::ofstream out(csv_path);
      if (!out) {
        std::cerr << "error: cannot write '" << csv_path << "'\n";
        return kExitUsage;
      }
      normcurv::write_geodesic_csv(out, m, run);
      std::cerr << "wrote " << run.curve.size() << " vertices to " << csv_path
                << " (max residual " << normcurv::format_real(run.max_constraint_residual) << ")\n";
      return 0;
    }

    if (*optimize) {
      std::ifstream in(freqs_path);
      if (!in) {
        std::cerr << "error: cannot read '" << freqs_path << "'\n";
        return kExitUsage;
      }
      const normcurv::TorusEmbedding start = normcurv::read_torus_config(in);
      return emit(normcurv::run_torus_optimize(start, opt), torus_out);
    }
  } catch (const normcurv::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFail;
  }
  return kExitUsage;
}
