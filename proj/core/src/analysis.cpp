#include "subrad/analysis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <thread>

#include "subrad/format.hpp"

namespace subrad {

std::string to_string(FitMode mode) {
  return mode == FitMode::anchored ? "anchored" : "free";
}

DecayFit fit_decay(const EvolutionSeries& series, FitWindow window,
                   FitMode mode) {
  if (!(window.t_begin < window.t_end))
    throw std::invalid_argument("fit_decay: empty window");

  std::vector<double> ts, logs;
  for (std::size_t j = 0; j < series.points(); ++j) {
    const double t = series.times[j];
    if (t < window.t_begin || t > window.t_end) continue;
    const double p = series.population(static_cast<Eigen::Index>(j));
    if (!(p > 0.0))
      throw std::invalid_argument(
          "fit_decay: nonpositive population inside the fit window");
    ts.push_back(t);
    logs.push_back(std::log(p));
  }
  if (ts.size() < 2)
    throw std::invalid_argument("fit_decay: fewer than two samples in window");

  DecayFit fit;
  fit.window = window;
  fit.mode = mode;
  if (mode == FitMode::anchored) {
    // Line pinned to the first sample of the series.
    const double t0 = series.times.front();
    const double p0 = series.population(0);
    if (!(p0 > 0.0))
      throw std::invalid_argument("fit_decay: nonpositive anchor population");
    const double log_p0 = std::log(p0);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      const double dt = ts[i] - t0;
      num += (log_p0 - logs[i]) * dt;
      den += dt * dt;
    }
    fit.rate = den > 0.0 ? num / den : 0.0;
    fit.intercept = log_p0 + fit.rate * t0;
  } else {
    const double n = static_cast<double>(ts.size());
    const double st = std::accumulate(ts.begin(), ts.end(), 0.0);
    const double sl = std::accumulate(logs.begin(), logs.end(), 0.0);
    double stt = 0.0, stl = 0.0;
    for (std::size_t i = 0; i < ts.size(); ++i) {
      stt += ts[i] * ts[i];
      stl += ts[i] * logs[i];
    }
    const double slope = (n * stl - st * sl) / (n * stt - st * st);
    fit.rate = -slope;
    fit.intercept = (sl - slope * st) / n;
  }

  double ss = 0.0;
  for (std::size_t i = 0; i < ts.size(); ++i) {
    const double r = logs[i] - (fit.intercept - fit.rate * ts[i]);
    ss += r * r;
  }
  fit.residual_rms = std::sqrt(ss / static_cast<double>(ts.size()));
  return fit;
}

BeatEstimate beat_period(const ModeWeights& weights, const Spectrum& spec,
                         BeatThresholds thresholds) {
  BeatEstimate beat;
  const auto n = weights.wt.size();
  if (n < 2) return beat;

  Eigen::Index a = 0, b = 1;
  if (weights.wt(b) > weights.wt(a)) std::swap(a, b);
  for (Eigen::Index l = 2; l < n; ++l) {
    if (weights.wt(l) > weights.wt(a)) {
      b = a;
      a = l;
    } else if (weights.wt(l) > weights.wt(b)) {
      b = l;
    }
  }
  beat.mode_a = static_cast<std::size_t>(a);
  beat.mode_b = static_cast<std::size_t>(b);
  beat.joint_weight = weights.wt(a) + weights.wt(b);

  if (weights.wt(a) < thresholds.min_weight ||
      weights.wt(b) < thresholds.min_weight ||
      beat.joint_weight <= thresholds.joint_weight)
    return beat;

  const double shift_diff =
      std::abs(spec.eigenvalues()(a).imag() - spec.eigenvalues()(b).imag());
  if (shift_diff == 0.0) return beat;  // degenerate shifts, nothing oscillates

  beat.found = true;
  beat.period = 2.0 * std::numbers::pi / shift_diff;
  return beat;
}

std::vector<std::pair<std::size_t, double>> scan_imprint_index(
    const Spectrum& spec, const HilbertSpace& space, std::size_t target_mode,
    int jobs) {
  if (spec.dim() != space.dim())
    throw std::invalid_argument("scan_imprint_index: spectrum/space mismatch");
  if (target_mode < 1 || target_mode > spec.dim())
    throw std::invalid_argument("scan_imprint_index: bad target mode");

  const auto dim = static_cast<Eigen::Index>(space.dim());
  const auto target = static_cast<Eigen::Index>(target_mode - 1);
  std::vector<std::pair<std::size_t, double>> ranking(space.dim());

  const auto configs = space.enumerate();
  Eigen::VectorXd f_minus_one(dim);
  for (Eigen::Index m = 0; m < dim; ++m)
    f_minus_one(m) =
        static_cast<double>(phase_index(configs[static_cast<std::size_t>(m)]) - 1);
  const double norm = 1.0 / std::sqrt(static_cast<double>(space.dim()));

  // Imprint phases are geometric in n; each worker claims a block of n and
  // pushes the two dim x block products through the BLAS path.
  const Eigen::Index block = std::min<Eigen::Index>(dim, 64);
  std::atomic<Eigen::Index> next_block{0};
  auto worker = [&]() {
    while (true) {
      const Eigen::Index n0 = 1 + next_block.fetch_add(1) * block;
      if (n0 > dim) return;
      const Eigen::Index cols = std::min(block, dim - n0 + 1);
      Eigen::MatrixXcd phases(dim, cols);
      for (Eigen::Index c = 0; c < cols; ++c) {
        const double step = 2.0 * std::numbers::pi * static_cast<double>(n0 + c) /
                            static_cast<double>(space.dim());
        for (Eigen::Index m = 0; m < dim; ++m)
          phases(m, c) = norm * std::exp(Complex(0.0, step * f_minus_one(m)));
      }
      const Eigen::MatrixXcd v_blk =
          spec.right_vectors().transpose() * phases.conjugate();
      const Eigen::MatrixXcd w_blk = spec.inverse_vectors() * phases;
      for (Eigen::Index c = 0; c < cols; ++c) {
        const Eigen::VectorXd raw =
            (v_blk.col(c).array() * w_blk.col(c).array()).abs2();
        ranking[static_cast<std::size_t>(n0 + c - 1)] = {
            static_cast<std::size_t>(n0 + c), raw(target) / raw.sum()};
      }
    }
  };
  const int n_workers = std::clamp<int>(
      jobs, 1, static_cast<int>((dim + block - 1) / block));
  if (n_workers == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(n_workers));
    for (int w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::stable_sort(ranking.begin(), ranking.end(),
                   [](const auto& lhs, const auto& rhs) {
                     if (lhs.second != rhs.second) return lhs.second > rhs.second;
                     return lhs.first < rhs.first;
                   });
  return ranking;
}

MinDecay min_decay(const Spectrum& spec) {
  if (spec.dim() == 0) throw std::invalid_argument("min_decay: empty spectrum");
  MinDecay best{1, spec.mode_decay(0)};
  for (std::size_t l = 1; l < spec.dim(); ++l) {
    const double d = spec.mode_decay(l);
    if (d < best.decay) best = MinDecay{l + 1, d};
  }
  return best;
}

std::optional<double> peak_spacing(const EvolutionSeries& series,
                                   double rel_prominence) {
  const auto n = series.population.size();
  if (n < 3) return std::nullopt;
  Eigen::VectorXd logp(n);
  for (Eigen::Index i = 0; i < n; ++i)
    logp(i) = std::log(std::max(series.population(i), 1e-300));

  std::vector<Eigen::Index> peaks;
  for (Eigen::Index i = 1; i + 1 < n; ++i)
    if (logp(i) > logp(i - 1) && logp(i) >= logp(i + 1)) peaks.push_back(i);
  if (peaks.size() < 2) return std::nullopt;

  // Prominence: drop to the highest of the two bracketing valleys, where a
  // valley extends to the nearest strictly higher point or the series edge.
  std::vector<double> prom(peaks.size());
  for (std::size_t p = 0; p < peaks.size(); ++p) {
    const Eigen::Index at = peaks[p];
    double left = logp(at);
    for (Eigen::Index i = at; i >= 0 && logp(i) <= logp(at); --i)
      left = std::min(left, logp(i));
    double right = logp(at);
    for (Eigen::Index i = at; i < n && logp(i) <= logp(at); ++i)
      right = std::min(right, logp(i));
    prom[p] = logp(at) - std::max(left, right);
  }

  const double cutoff =
      rel_prominence * *std::max_element(prom.begin(), prom.end());
  std::vector<double> kept;
  for (std::size_t p = 0; p < peaks.size(); ++p)
    if (prom[p] >= cutoff) kept.push_back(series.times[static_cast<std::size_t>(peaks[p])]);
  if (kept.size() < 2) return std::nullopt;
  return (kept.back() - kept.front()) / static_cast<double>(kept.size() - 1);
}

void write_fit_csv(std::ostream& os, const std::vector<DecayFit>& fits,
                   int excitations) {
  os << "mode,window_start,window_end,rate_gamma,lifetime_x_intrinsic,residual\n";
  for (const DecayFit& fit : fits)
    os << to_string(fit.mode) << ',' << format_g12(fit.window.t_begin) << ','
       << format_g12(fit.window.t_end) << ',' << format_g12(fit.rate) << ','
       << format_g12(fit.lifetime_ratio(excitations)) << ','
       << format_g12(fit.residual_rms) << '\n';
}

}  // namespace subrad
