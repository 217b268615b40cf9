#include "subrad/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <ostream>
#include <string>
#include <utility>

#include "subrad/errors.hpp"
#include "subrad/format.hpp"

#define LAPACK_COMPLEX_CUSTOM
#define lapack_complex_float std::complex<float>
#define lapack_complex_double std::complex<double>
#include <lapacke.h>

namespace subrad {

namespace {

Eigen::VectorXcd zgeev(Eigen::MatrixXcd work, Eigen::MatrixXcd* right_vectors) {
  const auto n = static_cast<lapack_int>(work.rows());
  Eigen::VectorXcd values(n);
  lapack_int info;
  if (right_vectors) {
    right_vectors->resize(n, n);
    info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'V', n, work.data(), n,
                         values.data(), nullptr, 1, right_vectors->data(), n);
  } else {
    info = LAPACKE_zgeev(LAPACK_COL_MAJOR, 'N', 'N', n, work.data(), n,
                         values.data(), nullptr, 1, nullptr, 1);
  }
  if (info != 0)
    throw NumericalError("zgeev failed with info=" + std::to_string(info));
  return values;
}

Eigen::MatrixXcd invert(Eigen::MatrixXcd m) {
  const auto n = static_cast<lapack_int>(m.rows());
  std::vector<lapack_int> ipiv(static_cast<std::size_t>(n));
  lapack_int info =
      LAPACKE_zgetrf(LAPACK_COL_MAJOR, n, n, m.data(), n, ipiv.data());
  if (info == 0)
    info = LAPACKE_zgetri(LAPACK_COL_MAJOR, n, m.data(), n, ipiv.data());
  if (info != 0)
    throw NumericalError("eigenvector matrix inversion failed, info=" +
                         std::to_string(info));
  return m;
}

}  // namespace

Spectrum::Spectrum(Eigen::VectorXcd eigenvalues, Eigen::MatrixXcd right_vectors,
                   Eigen::MatrixXcd inverse_vectors, std::vector<int> order)
    : eigenvalues_(std::move(eigenvalues)),
      right_vectors_(std::move(right_vectors)),
      inverse_vectors_(std::move(inverse_vectors)),
      order_(std::move(order)) {}

Spectrum diagonalize(const CouplingMatrix& a, double residual_tol) {
  const Eigen::MatrixXcd& m = a.matrix();
  if (!m.allFinite())
    throw std::invalid_argument("diagonalize: matrix has non-finite entries");

  Eigen::MatrixXcd u;
  Eigen::VectorXcd values = zgeev(m, &u);
  for (Eigen::Index c = 0; c < u.cols(); ++c) u.col(c).normalize();
  Eigen::MatrixXcd u_inv = invert(u);

  const double a_scale = m.cwiseAbs().maxCoeff();
  const double resid_eig =
      (m * u - u * values.asDiagonal()).cwiseAbs().maxCoeff();
  if (resid_eig > residual_tol * a_scale)
    throw NumericalError(
        "diagonalize: eigenpair residual " + format_g12(resid_eig) +
            " exceeds " + format_g12(residual_tol * a_scale),
        resid_eig);
  const auto n = u.rows();
  const double resid_inv =
      (u_inv * u - Eigen::MatrixXcd::Identity(n, n)).cwiseAbs().maxCoeff();
  if (resid_inv > residual_tol)
    throw NumericalError("diagonalize: inversion residual " +
                             format_g12(resid_inv) + " exceeds " +
                             format_g12(residual_tol),
                         resid_inv);

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  return Spectrum(std::move(values), std::move(u), std::move(u_inv),
                  std::move(order));
}

Eigen::VectorXcd eigenvalues_only(const CouplingMatrix& a) {
  if (!a.matrix().allFinite())
    throw std::invalid_argument("eigenvalues_only: matrix has non-finite entries");
  return zgeev(a.matrix(), nullptr);
}

Spectrum sort_modes(const Spectrum& spec, ModeSort key) {
  const auto n = static_cast<Eigen::Index>(spec.dim());
  std::vector<Eigen::Index> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  const auto& ev = spec.eigenvalues();
  auto sort_key = [&](Eigen::Index l) {
    const Complex z = ev(l);
    return key == ModeSort::decay_ascending
               ? std::make_pair(decay_constant(z), z.imag())
               : std::make_pair(2.0 * z.imag(), -z.real());
  };
  std::stable_sort(perm.begin(), perm.end(),
                   [&](Eigen::Index i, Eigen::Index j) {
                     return sort_key(i) < sort_key(j);
                   });

  Eigen::VectorXcd values(n);
  Eigen::MatrixXcd u(n, n);
  Eigen::MatrixXcd u_inv(n, n);
  std::vector<int> order(static_cast<std::size_t>(n));
  for (Eigen::Index l = 0; l < n; ++l) {
    const Eigen::Index src = perm[static_cast<std::size_t>(l)];
    values(l) = ev(src);
    u.col(l) = spec.right_vectors().col(src);
    u_inv.row(l) = spec.inverse_vectors().row(src);
    order[static_cast<std::size_t>(l)] =
        spec.order()[static_cast<std::size_t>(src)];
  }
  return Spectrum(std::move(values), std::move(u), std::move(u_inv),
                  std::move(order));
}

void write_eigenvalue_csv(std::ostream& os,
                          const Eigen::VectorXcd& eigenvalues) {
  os << "mode_index,re_2lambda_over_gamma,im_2lambda_over_gamma,decay_const\n";
  for (Eigen::Index l = 0; l < eigenvalues.size(); ++l) {
    const Complex z = eigenvalues(l);
    os << (l + 1) << ',' << format_g12(2.0 * z.real()) << ','
       << format_g12(2.0 * z.imag()) << ',' << format_g12(decay_constant(z))
       << '\n';
  }
}

void write_eigenvalue_csv(std::ostream& os, const Spectrum& spec) {
  write_eigenvalue_csv(os, spec.eigenvalues());
}

}  // namespace subrad
