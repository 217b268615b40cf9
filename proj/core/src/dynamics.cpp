#include "subrad/dynamics.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

#include "subrad/errors.hpp"
#include "subrad/format.hpp"

namespace subrad {

namespace {

void validate_grid(std::span<const double> times) {
  if (times.empty())
    throw std::invalid_argument("evolution: empty time grid");
  double prev = -0.0;
  for (double t : times) {
    if (!(t >= 0.0))
      throw std::invalid_argument("evolution: times must be nonnegative");
    if (t < prev)
      throw std::invalid_argument("evolution: times must be ascending");
    prev = t;
  }
}

Eigen::VectorXd populations(const Eigen::MatrixXcd& amplitudes) {
  return amplitudes.cwiseAbs2().colwise().sum();
}

// Pade(13) scaling-and-squaring matrix exponential; sized for the small
// Krylov projections, not for the full coupling matrix.
Eigen::MatrixXcd expm(Eigen::MatrixXcd a) {
  static constexpr double kPadeTheta13 = 5.371920351148152;
  static constexpr double b[] = {64764752532480000.0, 32382376266240000.0,
                                 7771770303897600.0,  1187353796428800.0,
                                 129060195264000.0,   10559470521600.0,
                                 670442572800.0,      33522128640.0,
                                 1323241920.0,        40840800.0,
                                 960960.0,            16380.0,
                                 182.0,               1.0};
  const auto n = a.rows();
  const double norm1 = a.cwiseAbs().colwise().sum().maxCoeff();
  int squarings = 0;
  if (norm1 > kPadeTheta13) {
    squarings = static_cast<int>(std::ceil(std::log2(norm1 / kPadeTheta13)));
    a /= std::pow(2.0, squarings);
  }
  const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(n, n);
  const Eigen::MatrixXcd a2 = a * a;
  const Eigen::MatrixXcd a4 = a2 * a2;
  const Eigen::MatrixXcd a6 = a2 * a4;
  const Eigen::MatrixXcd u =
      a * (a6 * (b[13] * a6 + b[11] * a4 + b[9] * a2) + b[7] * a6 + b[5] * a4 +
           b[3] * a2 + b[1] * id);
  const Eigen::MatrixXcd v = a6 * (b[12] * a6 + b[10] * a4 + b[8] * a2) +
                             b[6] * a6 + b[4] * a4 + b[2] * a2 + b[0] * id;
  Eigen::MatrixXcd f = (v - u).partialPivLu().solve(v + u);
  for (int i = 0; i < squarings; ++i) f = f * f;
  return f;
}

// One Krylov step: approximates exp(a * dt) v.
Eigen::VectorXcd krylov_step(const Eigen::MatrixXcd& a,
                             const Eigen::VectorXcd& v, double dt,
                             int subspace_dim, double breakdown_tol) {
  const double beta = v.norm();
  if (beta == 0.0) return v;

  const auto dim = a.rows();
  const int m = static_cast<int>(
      std::min<Eigen::Index>(subspace_dim, dim));
  Eigen::MatrixXcd basis(dim, m);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(m, m);
  basis.col(0) = v / beta;

  int built = m;
  for (int j = 0; j < m; ++j) {
    Eigen::VectorXcd w = a * basis.col(j);
    // Modified Gram-Schmidt with one reorthogonalization pass.
    for (int pass = 0; pass < 2; ++pass) {
      for (int i = 0; i <= j; ++i) {
        const Complex coeff = basis.col(i).dot(w);
        h(i, j) += coeff;
        w -= coeff * basis.col(i);
      }
    }
    const double next_norm = w.norm();
    if (j + 1 < m) {
      if (next_norm <= breakdown_tol) {
        built = j + 1;  // invariant subspace found; projection is exact
        break;
      }
      h(j + 1, j) = next_norm;
      basis.col(j + 1) = w / next_norm;
    }
  }

  const Eigen::MatrixXcd h_exp = expm(dt * h.topLeftCorner(built, built));
  return beta * basis.leftCols(built) * h_exp.col(0);
}

}  // namespace

std::vector<double> time_grid(double t_max, std::size_t points) {
  if (points == 0)
    throw std::invalid_argument("time_grid: need at least one point");
  if (!(t_max >= 0.0))
    throw std::invalid_argument("time_grid: t_max must be nonnegative");
  std::vector<double> out(points);
  if (points == 1) {
    out[0] = 0.0;
    return out;
  }
  for (std::size_t j = 0; j < points; ++j)
    out[j] = t_max * static_cast<double>(j) / static_cast<double>(points - 1);
  return out;
}

Eigen::VectorXcd imprint_phases(const HilbertSpace& space,
                                std::size_t imprint_index) {
  if (imprint_index < 1 || imprint_index > space.dim())
    throw std::invalid_argument("imprint_phases: index " +
                                std::to_string(imprint_index) +
                                " outside [1, " + std::to_string(space.dim()) +
                                "]");
  const auto configs = space.enumerate();
  const auto dim = static_cast<Eigen::Index>(space.dim());
  const double norm = 1.0 / std::sqrt(static_cast<double>(space.dim()));
  const double step =
      2.0 * std::numbers::pi * static_cast<double>(imprint_index) / static_cast<double>(space.dim());
  Eigen::VectorXcd phases(dim);
  for (Eigen::Index mm = 0; mm < dim; ++mm) {
    const int f = phase_index(configs[static_cast<std::size_t>(mm)]);
    phases(mm) = norm * std::exp(Complex(0.0, step * (f - 1)));
  }
  return phases;
}

AmplitudeState initial_timed_dicke(const HilbertSpace& space) {
  const auto dim = static_cast<Eigen::Index>(space.dim());
  return AmplitudeState{
      Eigen::VectorXcd::Constant(dim, Complex(1.0 / std::sqrt(static_cast<double>(dim)), 0.0)),
      0.0};
}

AmplitudeState initial_phase_imprinted(const HilbertSpace& space,
                                       std::size_t imprint_index) {
  return AmplitudeState{imprint_phases(space, imprint_index), 0.0};
}

EvolutionSeries evolve_eigen(const Spectrum& spec, const AmplitudeState& c0,
                             std::span<const double> times) {
  validate_grid(times);
  const auto dim = static_cast<Eigen::Index>(spec.dim());
  if (c0.amplitudes.size() != dim)
    throw std::invalid_argument("evolve_eigen: state/spectrum size mismatch");

  const Eigen::VectorXcd y0 = spec.inverse_vectors() * c0.amplitudes;
  const auto n_t = static_cast<Eigen::Index>(times.size());
  Eigen::MatrixXcd modal(dim, n_t);
  for (Eigen::Index j = 0; j < n_t; ++j)
    modal.col(j) =
        (spec.eigenvalues().array() * times[static_cast<std::size_t>(j)]).exp() *
        y0.array();
  EvolutionSeries series;
  series.times.assign(times.begin(), times.end());
  series.amplitudes = spec.right_vectors() * modal;
  series.population = populations(series.amplitudes);
  return series;
}

EvolutionSeries evolve_ode(const CouplingMatrix& a, const AmplitudeState& c0,
                           std::span<const double> times) {
  validate_grid(times);
  const Eigen::MatrixXcd& m = a.matrix();
  if (c0.amplitudes.size() != m.rows())
    throw std::invalid_argument("evolve_ode: state/matrix size mismatch");

  const double a_max = m.cwiseAbs().maxCoeff();
  const double h_max = std::min(1e-3, a_max > 0.0 ? 0.1 / a_max : 1e-3);

  EvolutionSeries series;
  series.times.assign(times.begin(), times.end());
  series.amplitudes.resize(m.rows(), static_cast<Eigen::Index>(times.size()));

  Eigen::VectorXcd c = c0.amplitudes;
  double t = c0.time;
  for (std::size_t j = 0; j < times.size(); ++j) {
    const double span = times[j] - t;
    if (span < 0.0)
      throw std::invalid_argument("evolve_ode: grid precedes initial time");
    if (span > 0.0) {
      const auto steps = static_cast<long>(std::ceil(span / h_max));
      const double h = span / static_cast<double>(steps);
      if (h < 1e-14)
        throw NumericalError("evolve_ode: step underflow", h);
      for (long s = 0; s < steps; ++s) {
        const Eigen::VectorXcd k1 = m * c;
        const Eigen::VectorXcd k2 = m * (c + 0.5 * h * k1);
        const Eigen::VectorXcd k3 = m * (c + 0.5 * h * k2);
        const Eigen::VectorXcd k4 = m * (c + h * k3);
        c += (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
      }
      t = times[j];
    }
    series.amplitudes.col(static_cast<Eigen::Index>(j)) = c;
  }
  series.population = populations(series.amplitudes);
  return series;
}

EvolutionSeries evolve_krylov(const CouplingMatrix& a, const AmplitudeState& c0,
                              std::span<const double> times, int subspace_dim) {
  validate_grid(times);
  if (subspace_dim < 2)
    throw std::invalid_argument("evolve_krylov: subspace_dim must be >= 2");
  const Eigen::MatrixXcd& m = a.matrix();
  if (c0.amplitudes.size() != m.rows())
    throw std::invalid_argument("evolve_krylov: state/matrix size mismatch");

  const double a_max = m.cwiseAbs().maxCoeff();
  const double breakdown_tol = 1e-12 * std::max(1.0, a_max);

  EvolutionSeries series;
  series.times.assign(times.begin(), times.end());
  series.amplitudes.resize(m.rows(), static_cast<Eigen::Index>(times.size()));

  Eigen::VectorXcd c = c0.amplitudes;
  double t = c0.time;
  for (std::size_t j = 0; j < times.size(); ++j) {
    const double span = times[j] - t;
    if (span < 0.0)
      throw std::invalid_argument("evolve_krylov: grid precedes initial time");
    if (span > 0.0) {
      // Substep so one Arnoldi projection per step stays well converged.
      const auto steps =
          std::max<long>(1, static_cast<long>(std::ceil(a_max * span / 2.0)));
      const double h = span / static_cast<double>(steps);
      for (long s = 0; s < steps; ++s)
        c = krylov_step(m, c, h, subspace_dim, breakdown_tol);
      t = times[j];
    }
    series.amplitudes.col(static_cast<Eigen::Index>(j)) = c;
  }
  series.population = populations(series.amplitudes);
  return series;
}

ModeWeights mode_weights(const Spectrum& spec, const HilbertSpace& space,
                         std::size_t imprint_index) {
  if (spec.dim() != space.dim())
    throw std::invalid_argument("mode_weights: spectrum/space size mismatch");
  const Eigen::VectorXcd phases = imprint_phases(space, imprint_index);
  ModeWeights weights;
  weights.v = spec.right_vectors().transpose() * phases.conjugate();
  weights.w = spec.inverse_vectors() * phases;
  const Eigen::VectorXd raw = (weights.v.array() * weights.w.array()).abs2();
  weights.wt = raw / raw.sum();
  return weights;
}

EvolutionSeries evolve_imprinted(const Spectrum& spec, const HilbertSpace& space,
                                 std::size_t imprint_index,
                                 std::span<const double> times) {
  validate_grid(times);
  const ModeWeights weights = mode_weights(spec, space, imprint_index);
  const Eigen::VectorXcd vw =
      weights.v.array() * weights.w.array();

  EvolutionSeries series;
  series.times.assign(times.begin(), times.end());
  series.amplitudes.resize(1, static_cast<Eigen::Index>(times.size()));
  for (std::size_t j = 0; j < times.size(); ++j)
    series.amplitudes(0, static_cast<Eigen::Index>(j)) =
        (vw.array() * (spec.eigenvalues().array() * times[j]).exp()).sum();
  series.population = populations(series.amplitudes);
  return series;
}

void write_evolution_csv(std::ostream& os, const EvolutionSeries& series) {
  if (series.amplitudes.rows() == 1) {
    os << "t_gamma,re_d,im_d,population\n";
    for (std::size_t j = 0; j < series.points(); ++j) {
      const Complex d = series.amplitudes(0, static_cast<Eigen::Index>(j));
      os << format_g12(series.times[j]) << ',' << format_g12(d.real()) << ','
         << format_g12(d.imag()) << ','
         << format_g12(series.population(static_cast<Eigen::Index>(j))) << '\n';
    }
  } else {
    os << "t_gamma,norm_sq\n";
    for (std::size_t j = 0; j < series.points(); ++j)
      os << format_g12(series.times[j]) << ','
         << format_g12(series.population(static_cast<Eigen::Index>(j))) << '\n';
  }
}

void write_weights_csv(std::ostream& os, const ModeWeights& weights,
                       const Spectrum& spec) {
  os << "mode_index,wt,re_2lambda_over_gamma,im_2lambda_over_gamma\n";
  for (Eigen::Index l = 0; l < weights.wt.size(); ++l) {
    const Complex z = spec.eigenvalues()(l);
    os << (l + 1) << ',' << format_g12(weights.wt(l)) << ','
       << format_g12(2.0 * z.real()) << ',' << format_g12(2.0 * z.imag())
       << '\n';
  }
}

}  // namespace subrad
