#include <doctest.h>

#include <cmath>
#include <numbers>
#include <sstream>

#include "subrad/analysis.hpp"
#include "subrad/coupling.hpp"
#include "test_util.hpp"

using namespace subrad;
namespace pi = std::numbers;

namespace {

/// Scalar series d(t) = sum_k coeff_k exp(lambda_k t) on a uniform grid.
EvolutionSeries synthetic_series(const std::vector<Complex>& coeffs,
                                 const std::vector<Complex>& lambdas,
                                 double t_max, std::size_t points) {
  EvolutionSeries series;
  series.times = time_grid(t_max, points);
  series.amplitudes.resize(1, static_cast<Eigen::Index>(points));
  for (std::size_t j = 0; j < points; ++j) {
    Complex d = 0.0;
    for (std::size_t k = 0; k < coeffs.size(); ++k)
      d += coeffs[k] * std::exp(lambdas[k] * series.times[j]);
    series.amplitudes(0, static_cast<Eigen::Index>(j)) = d;
  }
  series.population = series.amplitudes.cwiseAbs2().colwise().sum();
  return series;
}

Spectrum synthetic_spectrum(const std::vector<Complex>& lambdas) {
  const auto n = static_cast<Eigen::Index>(lambdas.size());
  Eigen::VectorXcd values(n);
  for (Eigen::Index l = 0; l < n; ++l)
    values(l) = lambdas[static_cast<std::size_t>(l)];
  std::vector<int> order(lambdas.size());
  for (std::size_t l = 0; l < lambdas.size(); ++l) order[l] = static_cast<int>(l);
  return Spectrum(values, Eigen::MatrixXcd::Identity(n, n),
                  Eigen::MatrixXcd::Identity(n, n), order);
}

ModeWeights synthetic_weights(const std::vector<double>& wt) {
  ModeWeights weights;
  const auto n = static_cast<Eigen::Index>(wt.size());
  weights.v.setOnes(n);
  weights.w.setOnes(n);
  weights.wt.resize(n);
  for (Eigen::Index l = 0; l < n; ++l)
    weights.wt(l) = wt[static_cast<std::size_t>(l)];
  return weights;
}

}  // namespace

TEST_CASE("pure exponential fits exactly in both modes") {
  const auto series =
      synthetic_series({Complex(1.0, 0.0)}, {Complex(-1.5, 0.0)}, 20.0, 401);
  for (const FitWindow window : {FitWindow{0.0, 20.0}, FitWindow{3.0, 12.0}}) {
    for (const FitMode mode : {FitMode::anchored, FitMode::free_intercept}) {
      const DecayFit fit = fit_decay(series, window, mode);
      CHECK(fit.rate == doctest::Approx(3.0).epsilon(1e-10));
      CHECK(fit.residual_rms < 1e-10);
      CHECK(fit.lifetime_ratio(3) == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("single mode population decays at twice the amplitude rate") {
  const Complex lambda(-0.15, 2.0);
  const auto series = synthetic_series({Complex(1.0, 0.0)}, {lambda}, 10.0, 201);
  const DecayFit fit =
      fit_decay(series, FitWindow{0.0, 10.0}, FitMode::free_intercept);
  CHECK(fit.rate == doctest::Approx(-2.0 * lambda.real()).epsilon(1e-10));
}

TEST_CASE("fit domain errors") {
  auto series =
      synthetic_series({Complex(1.0, 0.0)}, {Complex(-0.5, 0.0)}, 5.0, 11);
  CHECK_THROWS_AS(fit_decay(series, FitWindow{3.0, 1.0}, FitMode::anchored),
                  std::invalid_argument);
  CHECK_THROWS_AS(fit_decay(series, FitWindow{20.0, 30.0}, FitMode::anchored),
                  std::invalid_argument);
  series.population(5) = 0.0;
  CHECK_THROWS_AS(
      fit_decay(series, FitWindow{0.0, 5.0}, FitMode::free_intercept),
      std::invalid_argument);
}

TEST_CASE("beat qualification") {
  SUBCASE("two dominant modes with distinct shifts") {
    const Spectrum spec = synthetic_spectrum(
        {Complex(-0.002, -9.095), Complex(-0.0034, -8.765), Complex(-0.5, 0.0)});
    const BeatEstimate beat =
        beat_period(synthetic_weights({0.64, 0.31, 0.05}), spec);
    REQUIRE(beat.found);
    CHECK(beat.period == doctest::Approx(2.0 * pi::pi / 0.33).epsilon(1e-12));
    CHECK(beat.joint_weight == doctest::Approx(0.95));
  }
  SUBCASE("equal shifts give the no-beat result") {
    const Spectrum spec =
        synthetic_spectrum({Complex(-0.01, -3.0), Complex(-0.02, -3.0)});
    const BeatEstimate beat = beat_period(synthetic_weights({0.5, 0.5}), spec);
    CHECK_FALSE(beat.found);
  }
  SUBCASE("spread weightings give the no-beat result") {
    const Spectrum spec = synthetic_spectrum(
        {Complex(-0.1, -1.0), Complex(-0.2, -2.0), Complex(-0.3, -3.0),
         Complex(-0.4, -4.0)});
    const BeatEstimate beat =
        beat_period(synthetic_weights({0.3, 0.3, 0.2, 0.2}), spec);
    CHECK_FALSE(beat.found);
    CHECK(beat.joint_weight == doctest::Approx(0.6));
  }
  SUBCASE("a single dominant mode gives the no-beat result") {
    const Spectrum spec =
        synthetic_spectrum({Complex(-0.01, -3.0), Complex(-0.02, -2.0)});
    CHECK_FALSE(beat_period(synthetic_weights({0.96, 0.04}), spec).found);
  }
}

TEST_CASE("measured peak spacing matches the two-mode beat period") {
  const Complex la(-0.002, -9.095), lb(-0.0034, -8.765);
  const auto series = synthetic_series(
      {Complex(0.66, 0.0), Complex(0.34, 0.0)}, {la, lb}, 65.0, 6501);
  const auto spacing = peak_spacing(series);
  REQUIRE(spacing.has_value());
  const double expected = 2.0 * pi::pi / std::abs(la.imag() - lb.imag());
  CHECK(*spacing == doctest::Approx(expected).epsilon(0.02));
}

TEST_CASE("peak spacing needs at least two prominent peaks") {
  const auto flat =
      synthetic_series({Complex(1.0, 0.0)}, {Complex(-0.2, 0.0)}, 10.0, 101);
  CHECK_FALSE(peak_spacing(flat).has_value());
}

TEST_CASE("imprint scan") {
  SUBCASE("fully excited sector has the single trivial entry") {
    const CouplingMatrix a = CouplingMatrix::assemble(
        HilbertSpace(3, 3), Lattice::rectangular({1, 1, 3}, 0.25));
    const Spectrum spec = diagonalize(a);
    const auto ranking = scan_imprint_index(spec, a.space(), 1);
    REQUIRE(ranking.size() == 1);
    CHECK(ranking[0].first == 1);
    CHECK(ranking[0].second == doctest::Approx(1.0));
  }
  SUBCASE("ranking is a permutation with unit-interval weights") {
    const CouplingMatrix a = CouplingMatrix::assemble(
        HilbertSpace(5, 2), Lattice::rectangular({1, 1, 5}, 0.2));
    const Spectrum spec = sort_modes(diagonalize(a), ModeSort::decay_ascending);
    const auto ranking = scan_imprint_index(spec, a.space(), 1);
    REQUIRE(ranking.size() == 10);
    std::vector<bool> seen(11, false);
    for (const auto& [n, wt] : ranking) {
      CHECK(!seen[n]);
      seen[n] = true;
      CHECK(wt >= 0.0);
      CHECK(wt <= 1.0);
    }
    for (std::size_t i = 0; i + 1 < ranking.size(); ++i)
      CHECK(ranking[i].second >= ranking[i + 1].second);
    // Spot-check against the direct weight computation.
    for (std::size_t n : {std::size_t{1}, std::size_t{7}, std::size_t{10}}) {
      const ModeWeights direct = mode_weights(spec, a.space(), n);
      const auto it = std::find_if(ranking.begin(), ranking.end(),
                                   [&](const auto& e) { return e.first == n; });
      REQUIRE(it != ranking.end());
      CHECK(it->second == doctest::Approx(direct.wt(0)).epsilon(1e-12));
    }
  }
  SUBCASE("worker count does not change the ranking") {
    const CouplingMatrix a = CouplingMatrix::assemble(
        HilbertSpace(16, 2), Lattice::rectangular({1, 1, 16}, 0.21));
    const Spectrum spec = sort_modes(diagonalize(a), ModeSort::decay_ascending);
    const auto serial = scan_imprint_index(spec, a.space(), 1, 1);
    const auto parallel = scan_imprint_index(spec, a.space(), 1, 4);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].first == parallel[i].first);
      CHECK(serial[i].second == parallel[i].second);
    }
  }
  SUBCASE("target mode must exist") {
    const CouplingMatrix a = CouplingMatrix::assemble(
        HilbertSpace(4, 2), Lattice::rectangular({1, 1, 4}, 0.25));
    const Spectrum spec = diagonalize(a);
    CHECK_THROWS_AS(scan_imprint_index(spec, a.space(), 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(scan_imprint_index(spec, a.space(), 7),
                    std::invalid_argument);
  }
}

TEST_CASE("three-photon chain: n = 135 ranks near the top for mode 1") {
  const CouplingMatrix a = CouplingMatrix::assemble(
      HilbertSpace(16, 3), Lattice::rectangular({1, 1, 16}, 0.25));
  const Spectrum spec = sort_modes(diagonalize(a), ModeSort::decay_ascending);
  const auto ranking = scan_imprint_index(spec, a.space(), 1);
  REQUIRE(ranking.size() == 560);
  std::size_t rank_135 = 0;
  for (std::size_t i = 0; i < ranking.size(); ++i)
    if (ranking[i].first == 135) rank_135 = i + 1;
  CHECK(rank_135 <= 10);
  CHECK(ranking[rank_135 - 1].second > 0.7);
}

TEST_CASE("minimum decay constant") {
  SUBCASE("single atom") {
    const CouplingMatrix a = CouplingMatrix::assemble(
        HilbertSpace(1, 1), Lattice::rectangular({1, 1, 1}, 0.25));
    const MinDecay md = min_decay(diagonalize(a));
    CHECK(md.mode == 1);
    CHECK(md.decay == doctest::Approx(1.0));
  }
  SUBCASE("invariant under gauge stripping and sorting") {
    const CouplingMatrix a = CouplingMatrix::assemble(
        HilbertSpace(5, 2), Lattice::rectangular({1, 1, 5}, 0.3));
    const double base = min_decay(diagonalize(a)).decay;
    CHECK(min_decay(diagonalize(a.gauge_stripped())).decay ==
          doctest::Approx(base).epsilon(1e-10));
    const Spectrum sorted =
        sort_modes(diagonalize(a), ModeSort::decay_ascending);
    CHECK(min_decay(sorted).decay == doctest::Approx(base).epsilon(1e-12));
    CHECK(min_decay(sorted).mode == 1);
  }
}

TEST_CASE("fit report CSV") {
  const auto series =
      synthetic_series({Complex(1.0, 0.0)}, {Complex(-1.0, 0.0)}, 10.0, 101);
  const std::vector<DecayFit> fits = {
      fit_decay(series, FitWindow{0.0, 10.0}, FitMode::anchored),
      fit_decay(series, FitWindow{2.0, 10.0}, FitMode::free_intercept)};
  std::ostringstream os;
  write_fit_csv(os, fits, 2);
  const std::string text = os.str();
  CHECK(text.starts_with(
      "mode,window_start,window_end,rate_gamma,lifetime_x_intrinsic,residual\n"));
  CHECK(text.find("anchored,") != std::string::npos);
  CHECK(text.find("free,") != std::string::npos);
  CHECK(testutil::count_lines(text) == 3);
}
