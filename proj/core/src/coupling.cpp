#include "subrad/coupling.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>
#include <vector>

#include "subrad/format.hpp"
#include "subrad/kernel.hpp"

namespace subrad {

CouplingMatrix CouplingMatrix::assemble(const HilbertSpace& space,
                                        const Lattice& lattice) {
  if (space.atoms() != lattice.atom_count())
    throw std::invalid_argument(
        "CouplingMatrix: space and lattice disagree on atom count");

  const int n_atoms = space.atoms();
  const int m_exc = space.excitations();
  const auto dim = static_cast<Eigen::Index>(space.dim());

  // One kernel evaluation per site pair, reused across all bare-state pairs.
  Eigen::MatrixXcd site_coupling(n_atoms, n_atoms);
  const Eigen::Vector3d k_vec = lattice.wave_vector();
  for (int s1 = 1; s1 <= n_atoms; ++s1) {
    for (int s2 = s1 + 1; s2 <= n_atoms; ++s2) {
      const Separation sep = lattice.separation(s1, s2);
      const double cos_dr = lattice.dipole_axis().dot(sep.r_hat);
      const double f = pair_decay_rate(sep.xi, cos_dr);
      const double g = pair_frequency_shift(sep.xi, cos_dr);
      // The kernel factor is shared by both directions; only the traveling
      // phase flips under s1 <-> s2.
      const Complex base(-0.5 * f, g);
      const Complex phase = std::exp(Complex(0.0, -k_vec.dot(sep.r_vec)));
      site_coupling(s1 - 1, s2 - 1) = base * phase;
      site_coupling(s2 - 1, s1 - 1) = base * std::conj(phase);
    }
  }

  const auto configs = space.enumerate();
  Eigen::MatrixXcd a = Eigen::MatrixXcd::Zero(dim, dim);
  a.diagonal().setConstant(Complex(-0.5 * m_exc, 0.0));
  for (Eigen::Index n = 0; n < dim; ++n) {
    for (Eigen::Index m = n + 1; m < dim; ++m) {
      const auto [s1, s2] = sort_pair(configs[static_cast<std::size_t>(n)],
                                      configs[static_cast<std::size_t>(m)]);
      if (s1 == 0) continue;
      a(n, m) = site_coupling(s1 - 1, s2 - 1);
      a(m, n) = site_coupling(s2 - 1, s1 - 1);
    }
  }
  return CouplingMatrix(space, lattice, std::move(a), false);
}

CouplingMatrix CouplingMatrix::gauge_stripped() const {
  if (gauge_stripped_) return *this;

  // D = diag(exp(+i k . R_M(n))) undoes the exp(-i k.(r_s1 - r_s2)) factors:
  // configurations n, m coupled by sort_pair satisfy R_M(n) - R_M(m) = r_s1 - r_s2.
  const auto configs = space_.enumerate();
  const Eigen::Vector3d k_vec = lattice_.wave_vector();
  const auto dim = entries_.rows();
  Eigen::VectorXcd d(dim);
  for (Eigen::Index n = 0; n < dim; ++n) {
    Eigen::Vector3d r_sum = Eigen::Vector3d::Zero();
    for (int site : configs[static_cast<std::size_t>(n)].sites())
      r_sum += lattice_.position(site);
    d(n) = std::exp(Complex(0.0, k_vec.dot(r_sum)));
  }
  Eigen::MatrixXcd b = d.asDiagonal() * entries_ * d.conjugate().asDiagonal();
  return CouplingMatrix(space_, lattice_, std::move(b), true);
}

std::size_t CouplingMatrix::structural_nonzeros_per_row() const {
  return static_cast<std::size_t>(space_.excitations()) *
         static_cast<std::size_t>(space_.atoms() - space_.excitations());
}

std::size_t CouplingMatrix::count_offdiagonal_nonzeros(std::size_t row) const {
  if (row < 1 || row > dim())
    throw std::invalid_argument("count_offdiagonal_nonzeros: bad row");
  const auto r = static_cast<Eigen::Index>(row - 1);
  std::size_t count = 0;
  for (Eigen::Index m = 0; m < entries_.cols(); ++m)
    if (m != r && entries_(r, m) != Complex(0.0, 0.0)) ++count;
  return count;
}

void CouplingMatrix::write_nonzeros_csv(std::ostream& os) const {
  os << "row,col,re,im\n";
  for (Eigen::Index n = 0; n < entries_.rows(); ++n)
    for (Eigen::Index m = 0; m < entries_.cols(); ++m) {
      const Complex z = entries_(n, m);
      if (z == Complex(0.0, 0.0)) continue;
      os << (n + 1) << ',' << (m + 1) << ',' << format_g12(z.real()) << ','
         << format_g12(z.imag()) << '\n';
    }
}

}  // namespace subrad
