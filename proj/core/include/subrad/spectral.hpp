#ifndef SUBRAD_SPECTRAL_HPP
#define SUBRAD_SPECTRAL_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <iosfwd>
#include <vector>

#include "subrad/coupling.hpp"

namespace subrad {

enum class ModeSort { decay_ascending, shift_ascending };

/// Population decay constant of an eigenmode, -Re[2 lambda] / Gamma.
inline double decay_constant(Complex lambda) { return -2.0 * lambda.real(); }

/// Full eigendecomposition of a coupling matrix: A = U diag(lambda) U_inv.
/// Columns of U are unit-norm right eigenvectors; U_inv is the direct matrix
/// inverse (A is not normal, so U_inv is not the conjugate transpose).
class Spectrum {
 public:
  Spectrum(Eigen::VectorXcd eigenvalues, Eigen::MatrixXcd right_vectors,
           Eigen::MatrixXcd inverse_vectors, std::vector<int> order);

  std::size_t dim() const { return static_cast<std::size_t>(eigenvalues_.size()); }
  const Eigen::VectorXcd& eigenvalues() const { return eigenvalues_; }
  const Eigen::MatrixXcd& right_vectors() const { return right_vectors_; }
  const Eigen::MatrixXcd& inverse_vectors() const { return inverse_vectors_; }

  /// Presentation permutation: order()[l] is the original solver index of
  /// the mode currently labeled l (0-based).
  const std::vector<int>& order() const { return order_; }

  /// Decay constant of mode l in the current order (0-based l).
  double mode_decay(std::size_t l) const {
    return decay_constant(eigenvalues_(static_cast<Eigen::Index>(l)));
  }

 private:
  Eigen::VectorXcd eigenvalues_;
  Eigen::MatrixXcd right_vectors_;
  Eigen::MatrixXcd inverse_vectors_;
  std::vector<int> order_;
};

/// Dense non-Hermitian eigendecomposition (LAPACK zgeev + LU inversion).
/// Verifies the residuals ||A U - U diag(lambda)||_max <= tol ||A||_max and
/// ||U_inv U - I||_max <= tol; throws NumericalError with the offending
/// residual otherwise.
Spectrum diagonalize(const CouplingMatrix& a, double residual_tol = 1e-9);

/// Eigenvalues alone, skipping eigenvector accumulation and inversion.
Eigen::VectorXcd eigenvalues_only(const CouplingMatrix& a);

/// Relabels modes by the chosen key; pure permutation of the decomposition.
Spectrum sort_modes(const Spectrum& spec, ModeSort key);

/// CSV: mode_index, re_2lambda_over_gamma, im_2lambda_over_gamma, decay_const.
/// Rows follow the given order; mode_index is 1-based.
void write_eigenvalue_csv(std::ostream& os, const Eigen::VectorXcd& eigenvalues);
void write_eigenvalue_csv(std::ostream& os, const Spectrum& spec);

}  // namespace subrad

#endif
