#ifndef SUBRAD_DYNAMICS_HPP
#define SUBRAD_DYNAMICS_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "subrad/coupling.hpp"
#include "subrad/hilbert.hpp"
#include "subrad/spectral.hpp"

namespace subrad {

/// Bare-state amplitude vector at a single time (time in units of 1/Gamma).
struct AmplitudeState {
  Eigen::VectorXcd amplitudes;
  double time = 0.0;

  double norm_sq() const { return amplitudes.squaredNorm(); }
};

/// Amplitudes sampled on a time grid. Columns of `amplitudes` are the state
/// at times[j]; for scalar series (a single projected amplitude d_n) the
/// matrix has one row. `population` is the squared norm per column.
struct EvolutionSeries {
  std::vector<double> times;
  Eigen::MatrixXcd amplitudes;
  Eigen::VectorXd population;

  std::size_t points() const { return times.size(); }
};

/// Eigenmode overlaps of one phase-imprinted state: v_l is the projection of
/// the state onto eigenvector l, w_l the matching inverse-side factor, and
/// wt the normalized weighting |v_l w_l|^2 / sum_l |v_l w_l|^2.
struct ModeWeights {
  Eigen::VectorXcd v;
  Eigen::VectorXcd w;
  Eigen::VectorXd wt;
};

/// Uniform grid of `points` times covering [0, t_max].
std::vector<double> time_grid(double t_max, std::size_t points);

/// Imprint phase vector: component m is exp(i 2 pi n (f_m - 1) / dim) / sqrt(dim)
/// with f_m the phase index of the m-th configuration in canonical order.
Eigen::VectorXcd imprint_phases(const HilbertSpace& space,
                                std::size_t imprint_index);

/// Symmetric start c_m(0) = 1 / sqrt(dim): every configuration equally
/// populated after plane-wave multiphoton absorption.
AmplitudeState initial_timed_dicke(const HilbertSpace& space);

/// Linearly phase-imprinted start, n in [1, dim].
AmplitudeState initial_phase_imprinted(const HilbertSpace& space,
                                       std::size_t imprint_index);

/// c(t) = U exp(lambda t) U_inv c(0) on the given grid.
EvolutionSeries evolve_eigen(const Spectrum& spec, const AmplitudeState& c0,
                             std::span<const double> times);

/// Fixed-step RK4 integration of dc/dt = A c; independent of the spectral
/// path. Step h <= min(1e-3, 0.1 / max|A_ij|), refined to land exactly on
/// each grid point.
EvolutionSeries evolve_ode(const CouplingMatrix& a, const AmplitudeState& c0,
                           std::span<const double> times);

/// Arnoldi approximation of exp(A dt) applied stepwise along the grid.
/// Happy breakdown terminates the recurrence early (result exact).
EvolutionSeries evolve_krylov(const CouplingMatrix& a, const AmplitudeState& c0,
                              std::span<const double> times, int subspace_dim);

/// v_l(n), w_l(n) and the normalized weighting wt(l) for imprint index n.
ModeWeights mode_weights(const Spectrum& spec, const HilbertSpace& space,
                         std::size_t imprint_index);

/// Projected amplitude d_n(t) = sum_l v_l(n) exp(lambda_l t) w_l(n) as a
/// one-row series; population is |d_n|^2.
EvolutionSeries evolve_imprinted(const Spectrum& spec, const HilbertSpace& space,
                                 std::size_t imprint_index,
                                 std::span<const double> times);

/// Scalar series CSV: t_gamma, re_d, im_d, population.
/// Full-state series CSV: t_gamma, norm_sq.
void write_evolution_csv(std::ostream& os, const EvolutionSeries& series);

/// CSV: mode_index, wt, re_2lambda_over_gamma, im_2lambda_over_gamma.
void write_weights_csv(std::ostream& os, const ModeWeights& weights,
                       const Spectrum& spec);

}  // namespace subrad

#endif
