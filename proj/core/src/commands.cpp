#include "subrad/commands.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "subrad/coupling.hpp"
#include "subrad/dynamics.hpp"
#include "subrad/errors.hpp"
#include "subrad/format.hpp"
#include "subrad/spectral.hpp"

namespace subrad {

namespace {

namespace fs = std::filesystem;

HilbertSpace make_space(const RunConfig& cfg) {
  return HilbertSpace(cfg.dims.count(), cfg.excitations);
}

Lattice make_lattice(const RunConfig& cfg) {
  return Lattice::rectangular(cfg.dims, cfg.spacing_lambda, cfg.d_hat,
                              cfg.k_hat);
}

std::ofstream open_for_write(const fs::path& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path.string());
  return out;
}

double expected_trace(std::size_t dim, int excitations) {
  return -0.5 * static_cast<double>(dim) * excitations;
}

Eigen::VectorXcd decay_sorted(Eigen::VectorXcd values) {
  std::sort(values.data(), values.data() + values.size(),
            [](Complex a, Complex b) {
              return std::make_pair(decay_constant(a), a.imag()) <
                     std::make_pair(decay_constant(b), b.imag());
            });
  return values;
}

void write_spectrum_plot(const fs::path& path, const std::string& csv_name) {
  auto out = open_for_write(path);
  out << "#!/usr/bin/env python3\n"
         "\"\"\"Plot decay constants from " << csv_name << " (companion script).\"\"\"\n"
         "import csv\n"
         "import matplotlib.pyplot as plt\n"
         "\n"
         "modes, decays = [], []\n"
         "with open(\"" << csv_name << "\") as fh:\n"
         "    for row in csv.DictReader(fh):\n"
         "        modes.append(int(row[\"mode_index\"]))\n"
         "        decays.append(float(row[\"decay_const\"]))\n"
         "\n"
         "plt.figure(figsize=(6, 4))\n"
         "plt.semilogy(modes, decays, \".\", ms=3)\n"
         "plt.axhline(1.0, color=\"gray\", lw=0.8)\n"
         "plt.xlabel(\"mode index (decay ascending)\")\n"
         "plt.ylabel(\"decay constant  $-\\\\mathrm{Re}[2\\\\lambda]/\\\\Gamma$\")\n"
         "plt.tight_layout()\n"
         "plt.savefig(\"spectrum.png\", dpi=160)\n";
}

void write_evolution_plot(const fs::path& path, const std::string& csv_name,
                          int excitations) {
  auto out = open_for_write(path);
  out << "#!/usr/bin/env python3\n"
         "\"\"\"Plot the population series from " << csv_name << " (companion script).\"\"\"\n"
         "import csv\n"
         "import math\n"
         "import matplotlib.pyplot as plt\n"
         "\n"
         "ts, ps = [], []\n"
         "with open(\"" << csv_name << "\") as fh:\n"
         "    for row in csv.DictReader(fh):\n"
         "        ts.append(float(row[\"t_gamma\"]))\n"
         "        ps.append(float(row[\"population\"]))\n"
         "\n"
         "m = " << excitations << "\n"
         "plt.figure(figsize=(6, 4))\n"
         "plt.semilogy(ts, ps, label=\"$P(t)$\")\n"
         "plt.semilogy(ts, [math.exp(-m * t) for t in ts], \"--\",\n"
         "             label=f\"$e^{{-{m}\\\\Gamma t}}$\")\n"
         "plt.xlabel(\"$\\\\Gamma t$\")\n"
         "plt.ylabel(\"population\")\n"
         "plt.legend()\n"
         "plt.tight_layout()\n"
         "plt.savefig(\"evolution.png\", dpi=160)\n";
}

}  // namespace

fs::path resolve_output_dir(const RunConfig& cfg, const RunOptions& opts) {
  fs::path dir;
  if (!opts.output_dir_override.empty()) {
    dir = opts.output_dir_override;
  } else if (const char* env = std::getenv(kOutputDirEnv); env && *env) {
    dir = env;
  } else {
    dir = cfg.output_dir;
  }
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw ConfigError("cannot create output dir " + dir.string());
  return dir;
}

SpectrumResult cmd_spectrum(const RunConfig& cfg, const RunOptions& opts) {
  const fs::path dir = resolve_output_dir(cfg, opts);
  const HilbertSpace space = make_space(cfg);
  const Lattice lattice = make_lattice(cfg);
  const CouplingMatrix coupling = CouplingMatrix::assemble(space, lattice);

  if (opts.dump_matrix) {
    auto out = open_for_write(dir / "coupling.csv");
    coupling.write_nonzeros_csv(out);
  }

  const Eigen::VectorXcd sorted = decay_sorted(eigenvalues_only(coupling));

  SpectrumResult result;
  result.dim = space.dim();
  result.min_decay = MinDecay{1, decay_constant(sorted(0))};
  result.max_decay = decay_constant(sorted(sorted.size() - 1));
  const double expected = expected_trace(space.dim(), cfg.excitations);
  result.trace_residual =
      std::abs(sorted.sum().real() - expected) / std::abs(expected) +
      std::abs(sorted.sum().imag()) / std::abs(expected);

  result.csv_path = dir / "spectrum.csv";
  {
    auto out = open_for_write(result.csv_path);
    write_eigenvalue_csv(out, sorted);
  }
  result.plot_path = dir / "plot_spectrum.py";
  write_spectrum_plot(result.plot_path, "spectrum.csv");
  return result;
}

EvolveResult cmd_evolve(const RunConfig& cfg, const RunOptions& opts) {
  if (!cfg.imprint_index)
    throw ConfigError("evolve requires the imprint index `n`");
  const fs::path dir = resolve_output_dir(cfg, opts);
  const HilbertSpace space = make_space(cfg);
  const Lattice lattice = make_lattice(cfg);
  const CouplingMatrix coupling = CouplingMatrix::assemble(space, lattice);
  const Spectrum spec =
      sort_modes(diagonalize(coupling), ModeSort::decay_ascending);
  const ModeWeights weights = mode_weights(spec, space, *cfg.imprint_index);
  const std::vector<double> grid = time_grid(cfg.t_max_gamma, cfg.n_time_points);

  EvolutionSeries series;
  switch (cfg.evolution_path) {
    case EvolutionPath::eigen:
      series = evolve_imprinted(spec, space, *cfg.imprint_index, grid);
      break;
    case EvolutionPath::ode:
    case EvolutionPath::krylov: {
      const AmplitudeState c0 =
          initial_phase_imprinted(space, *cfg.imprint_index);
      const EvolutionSeries full =
          cfg.evolution_path == EvolutionPath::ode
              ? evolve_ode(coupling, c0, grid)
              : evolve_krylov(coupling, c0, grid, cfg.krylov_dim);
      // Project the full state back onto the imprinted mode amplitude d_n.
      const Eigen::VectorXcd phases =
          imprint_phases(space, *cfg.imprint_index);
      series.times = full.times;
      series.amplitudes.resize(1, full.amplitudes.cols());
      for (Eigen::Index j = 0; j < full.amplitudes.cols(); ++j)
        series.amplitudes(0, j) = phases.dot(full.amplitudes.col(j));
      series.population = series.amplitudes.cwiseAbs2().colwise().sum();
      break;
    }
  }

  EvolveResult result;
  result.dim = space.dim();
  result.beat = beat_period(weights, spec);

  result.evolution_csv = dir / "evolution.csv";
  {
    auto out = open_for_write(result.evolution_csv);
    write_evolution_csv(out, series);
  }
  result.weights_csv = dir / "weights.csv";
  {
    auto out = open_for_write(result.weights_csv);
    write_weights_csv(out, weights, spec);
  }
  if (cfg.fit_window) {
    if (cfg.fit_mode == FitSelection::anchored ||
        cfg.fit_mode == FitSelection::both)
      result.fits.push_back(
          fit_decay(series, *cfg.fit_window, FitMode::anchored));
    if (cfg.fit_mode == FitSelection::free_intercept ||
        cfg.fit_mode == FitSelection::both)
      result.fits.push_back(
          fit_decay(series, *cfg.fit_window, FitMode::free_intercept));
    result.fit_csv = dir / "fit.csv";
    auto out = open_for_write(result.fit_csv);
    write_fit_csv(out, result.fits, cfg.excitations);
  }
  result.plot_path = dir / "plot_evolution.py";
  write_evolution_plot(result.plot_path, "evolution.csv", cfg.excitations);
  return result;
}

ScanResult cmd_scan(const RunConfig& cfg, std::size_t target_mode,
                    const RunOptions& opts) {
  const fs::path dir = resolve_output_dir(cfg, opts);
  const HilbertSpace space = make_space(cfg);
  const Lattice lattice = make_lattice(cfg);
  const CouplingMatrix coupling = CouplingMatrix::assemble(space, lattice);
  const Spectrum spec =
      sort_modes(diagonalize(coupling), ModeSort::decay_ascending);

  ScanResult result;
  result.dim = space.dim();
  result.ranking =
      scan_imprint_index(spec, space, target_mode, std::max(1, opts.jobs));
  result.csv_path = dir / "scan.csv";
  auto out = open_for_write(result.csv_path);
  out << "n,wt\n";
  for (const auto& [n, wt] : result.ranking)
    out << n << ',' << format_g12(wt) << '\n';
  return result;
}

SweepResult cmd_sweep(const RunConfig& cfg, SweepParam param,
                      const std::vector<std::string>& values,
                      const RunOptions& opts) {
  if (values.empty())
    throw ConfigError("sweep requires at least one value");
  const fs::path dir = resolve_output_dir(cfg, opts);

  // Validate every value (and build its config) before any computation.
  std::vector<RunConfig> run_cfgs;
  run_cfgs.reserve(values.size());
  for (const std::string& value : values) {
    RunConfig run = cfg;
    if (param == SweepParam::spacing) {
      try {
        std::size_t used = 0;
        run.spacing_lambda = std::stod(value, &used);
        if (used != value.size() || !(run.spacing_lambda > 0.0))
          throw std::invalid_argument(value);
      } catch (...) {
        throw ConfigError("sweep: bad spacing value `" + value + "`");
      }
    } else {
      GridDims dims;
      char sep1 = 0, sep2 = 0;
      std::istringstream ss(value);
      if (!(ss >> dims.nx >> sep1 >> dims.ny >> sep2 >> dims.nz) ||
          sep1 != 'x' || sep2 != 'x' || !ss.eof() || dims.nx < 1 ||
          dims.ny < 1 || dims.nz < 1)
        throw ConfigError("sweep: bad geometry value `" + value +
                          "` (expected NXxNYxNZ)");
      run.dims = dims;
      if (run.excitations > dims.count() ||
          binomial(dims.count(), run.excitations) > kDefaultDimCap)
        throw ConfigError("sweep: geometry `" + value +
                          "` incompatible with m=" +
                          std::to_string(run.excitations));
    }
    run_cfgs.push_back(std::move(run));
  }

  SweepResult result;
  result.rows.resize(values.size());
  std::atomic<std::size_t> next{0};
  std::mutex error_mutex;
  std::exception_ptr first_error;

  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= values.size()) return;
      try {
        const RunConfig& run = run_cfgs[i];
        const HilbertSpace space = make_space(run);
        const Lattice lattice = make_lattice(run);
        const Eigen::VectorXcd lambdas =
            eigenvalues_only(CouplingMatrix::assemble(space, lattice));
        double lo = decay_constant(lambdas(0)), hi = lo;
        for (Eigen::Index l = 1; l < lambdas.size(); ++l) {
          const double d = decay_constant(lambdas(l));
          lo = std::min(lo, d);
          hi = std::max(hi, d);
        }
        result.rows[i] = SweepRow{values[i], lo, hi};
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    }
  };

  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1 || values.size() == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    const std::size_t n_workers =
        std::min<std::size_t>(static_cast<std::size_t>(jobs), values.size());
    pool.reserve(n_workers);
    for (std::size_t w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (first_error) std::rethrow_exception(first_error);

  result.csv_path = dir / "sweep.csv";
  auto out = open_for_write(result.csv_path);
  out << "value,min_decay_gamma,max_decay_gamma\n";
  for (const SweepRow& row : result.rows)
    out << row.value << ',' << format_g12(row.min_decay) << ','
        << format_g12(row.max_decay) << '\n';
  return result;
}

}  // namespace subrad
