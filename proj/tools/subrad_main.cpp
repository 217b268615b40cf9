// Command line front end: spectrum | evolve | scan | sweep.
// Exit codes: 0 success, 1 config error, 2 numerical failure.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "subrad/commands.hpp"
#include "subrad/errors.hpp"
#include "subrad/format.hpp"
#include "subrad/run_config.hpp"

namespace {

using namespace subrad;

void print_kv(const std::string& key, const std::string& value) {
  std::cout << key << "=" << value << "\n";
}

void print_kv(const std::string& key, double value) {
  print_kv(key, format_g12(value));
}

struct CommonArgs {
  std::string config_path;
  std::string out_dir;
  int jobs = 1;
};

void add_common(CLI::App* cmd, CommonArgs& args) {
  cmd->add_option("--config", args.config_path, "Run config file")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", args.out_dir,
                  "Output directory (overrides config and " +
                      std::string(kOutputDirEnv) + ")");
  cmd->add_option("--jobs", args.jobs, "Worker pool size for sweeps and scans")
      ->check(CLI::PositiveNumber);
}

RunOptions make_options(const CommonArgs& args) {
  RunOptions opts;
  opts.output_dir_override = args.out_dir;
  opts.jobs = args.jobs;
  return opts;
}

int run(int argc, char** argv) {
  CLI::App app{"Collective-emission simulator for phase-imprinted "
               "multiphoton states in two-level atomic arrays"};
  app.require_subcommand(1);

  CommonArgs spectrum_args;
  bool dump_matrix = false;
  CLI::App* spectrum =
      app.add_subcommand("spectrum", "Eigenvalue table and decay constants");
  add_common(spectrum, spectrum_args);
  spectrum->add_flag("--dump-matrix", dump_matrix,
                     "Also write the nonzero coupling entries");

  CommonArgs evolve_args;
  CLI::App* evolve =
      app.add_subcommand("evolve", "Time evolution of an imprinted state");
  add_common(evolve, evolve_args);

  CommonArgs scan_args;
  std::size_t target_mode = 1;
  CLI::App* scan = app.add_subcommand(
      "scan", "Rank imprint indices by weighting on a target mode");
  add_common(scan, scan_args);
  scan->add_option("--target-mode", target_mode,
                   "1-based mode label, decay-ascending order");

  CommonArgs sweep_args;
  std::string sweep_param = "spacing";
  std::vector<std::string> sweep_values;
  CLI::App* sweep =
      app.add_subcommand("sweep", "Extreme decay constants per parameter value");
  add_common(sweep, sweep_args);
  sweep->add_option("--param", sweep_param, "spacing | geometry")
      ->check(CLI::IsMember({"spacing", "geometry"}));
  sweep->add_option("--values", sweep_values, "Parameter values")
      ->required()
      ->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    // Anything other than a clean help/version exit is a config error.
    return code == 0 ? 0 : 1;
  }

  if (spectrum->parsed()) {
    RunOptions opts = make_options(spectrum_args);
    opts.dump_matrix = dump_matrix;
    const SpectrumResult r =
        cmd_spectrum(load_run_config(spectrum_args.config_path), opts);
    print_kv("dim", static_cast<double>(r.dim));
    print_kv("min_decay_gamma", r.min_decay.decay);
    print_kv("max_decay_gamma", r.max_decay);
    print_kv("trace_residual", r.trace_residual);
    print_kv("csv", r.csv_path.string());
  } else if (evolve->parsed()) {
    const EvolveResult r =
        cmd_evolve(load_run_config(evolve_args.config_path),
                   make_options(evolve_args));
    print_kv("dim", static_cast<double>(r.dim));
    print_kv("beat_found", r.beat.found ? "1" : "0");
    if (r.beat.found) print_kv("beat_period_gamma", r.beat.period);
    print_kv("top2_joint_weight", r.beat.joint_weight);
    for (const DecayFit& fit : r.fits) {
      print_kv("fit_rate_gamma_" + to_string(fit.mode), fit.rate);
      print_kv("fit_residual_" + to_string(fit.mode), fit.residual_rms);
    }
    print_kv("csv", r.evolution_csv.string());
  } else if (scan->parsed()) {
    const ScanResult r = cmd_scan(load_run_config(scan_args.config_path),
                                  target_mode, make_options(scan_args));
    print_kv("dim", static_cast<double>(r.dim));
    print_kv("best_n", static_cast<double>(r.ranking.front().first));
    print_kv("best_wt", r.ranking.front().second);
    print_kv("csv", r.csv_path.string());
  } else if (sweep->parsed()) {
    const SweepParam param = sweep_param == "spacing" ? SweepParam::spacing
                                                      : SweepParam::geometry;
    const SweepResult r = cmd_sweep(load_run_config(sweep_args.config_path),
                                    param, sweep_values,
                                    make_options(sweep_args));
    for (const SweepRow& row : r.rows)
      std::cout << row.value << ": min_decay_gamma="
                << format_g12(row.min_decay)
                << " max_decay_gamma=" << format_g12(row.max_decay) << "\n";
    print_kv("csv", r.csv_path.string());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 2;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
