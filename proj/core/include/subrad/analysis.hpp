#ifndef SUBRAD_ANALYSIS_HPP
#define SUBRAD_ANALYSIS_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "subrad/dynamics.hpp"
#include "subrad/spectral.hpp"

namespace subrad {

enum class FitMode { anchored, free_intercept };

std::string to_string(FitMode mode);

struct FitWindow {
  double t_begin = 0.0;
  double t_end = 0.0;
};

/// Log-linear decay fit of a population series: ln P ~ intercept - rate * t.
struct DecayFit {
  double rate = 0.0;       // population decay rate, units Gamma
  double intercept = 0.0;  // ln P at t = 0
  FitWindow window;
  FitMode mode = FitMode::free_intercept;
  double residual_rms = 0.0;

  /// Lifetime as a multiple of the M-excitation intrinsic lifetime 1/(M Gamma).
  double lifetime_ratio(int excitations) const { return excitations / rate; }
};

/// Least-squares line on (t, ln P) over the window. Anchored mode forces the
/// intercept through the first sample of the series; population must be
/// positive throughout the window.
DecayFit fit_decay(const EvolutionSeries& series, FitWindow window,
                   FitMode mode);

struct BeatThresholds {
  double min_weight = 0.05;    // each of the two dominant modes
  double joint_weight = 0.75;  // sum of the two dominant modes
};

/// Two-mode beat estimate. Reported only when the two largest weightings both
/// clear min_weight and jointly clear joint_weight; a spread-out weighting
/// distribution yields found == false (the no-beat result).
struct BeatEstimate {
  bool found = false;
  double period = 0.0;       // 2 pi / |Im lambda_a - Im lambda_b|, units 1/Gamma
  std::size_t mode_a = 0;    // 0-based presentation indices of the two modes
  std::size_t mode_b = 0;
  double joint_weight = 0.0;
};

BeatEstimate beat_period(const ModeWeights& weights, const Spectrum& spec,
                         BeatThresholds thresholds = {});

/// wt(target_mode) for every imprint index n in [1, dim], ranked descending
/// (ties broken by ascending n). target_mode is the 1-based label in the
/// spectrum's current order. Blocks of n are independent and fan out over
/// `jobs` workers; the result does not depend on jobs.
std::vector<std::pair<std::size_t, double>> scan_imprint_index(
    const Spectrum& spec, const HilbertSpace& space, std::size_t target_mode,
    int jobs = 1);

struct MinDecay {
  std::size_t mode = 0;  // 1-based label in the current order
  double decay = 0.0;    // units Gamma
};

MinDecay min_decay(const Spectrum& spec);

/// Mean spacing of the dominant local maxima of ln P(t). Peaks are kept when
/// their prominence reaches rel_prominence times the largest prominence;
/// nullopt when fewer than two qualify.
std::optional<double> peak_spacing(const EvolutionSeries& series,
                                   double rel_prominence = 0.25);

/// CSV: mode, window_start, window_end, rate_gamma, lifetime_x_intrinsic,
/// residual.
void write_fit_csv(std::ostream& os, const std::vector<DecayFit>& fits,
                   int excitations);

}  // namespace subrad

#endif
