#ifndef SUBRAD_COMMANDS_HPP
#define SUBRAD_COMMANDS_HPP

#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include "subrad/analysis.hpp"
#include "subrad/run_config.hpp"

namespace subrad {

/// Environment variable overriding the config's output_dir (itself overridden
/// by an explicit --out).
inline constexpr const char* kOutputDirEnv = "SUBRAD_OUTPUT_DIR";

struct RunOptions {
  std::string output_dir_override;  // empty = none
  int jobs = 1;
  bool dump_matrix = false;
};

std::filesystem::path resolve_output_dir(const RunConfig& cfg,
                                         const RunOptions& opts);

struct SpectrumResult {
  std::size_t dim = 0;
  MinDecay min_decay;
  double max_decay = 0.0;
  double trace_residual = 0.0;  // relative defect of sum(lambda) vs -dim*M/2
  std::filesystem::path csv_path;
  std::filesystem::path plot_path;
};

/// Eigenvalue table of the configured system, decay-ascending.
SpectrumResult cmd_spectrum(const RunConfig& cfg, const RunOptions& opts = {});

struct EvolveResult {
  std::size_t dim = 0;
  BeatEstimate beat;
  std::vector<DecayFit> fits;  // per fit_mode, when fit_window is configured
  std::filesystem::path evolution_csv;
  std::filesystem::path weights_csv;
  std::filesystem::path fit_csv;  // empty when no fit was requested
  std::filesystem::path plot_path;
};

/// Time evolution of the configured phase-imprinted state (requires n).
EvolveResult cmd_evolve(const RunConfig& cfg, const RunOptions& opts = {});

struct ScanResult {
  std::size_t dim = 0;
  std::vector<std::pair<std::size_t, double>> ranking;
  std::filesystem::path csv_path;
};

/// Ranking of every imprint index by its weighting on target_mode (1-based,
/// decay-ascending order).
ScanResult cmd_scan(const RunConfig& cfg, std::size_t target_mode,
                    const RunOptions& opts = {});

enum class SweepParam { spacing, geometry };

struct SweepRow {
  std::string value;
  double min_decay = 0.0;
  double max_decay = 0.0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::filesystem::path csv_path;
};

/// Per-value extreme decay constants; values run concurrently up to
/// opts.jobs workers. Spacing values are numbers, geometry values are
/// `NXxNYxNZ` triples.
SweepResult cmd_sweep(const RunConfig& cfg, SweepParam param,
                      const std::vector<std::string>& values,
                      const RunOptions& opts = {});

}  // namespace subrad

#endif
