#ifndef SUBRAD_GEOMETRY_HPP
#define SUBRAD_GEOMETRY_HPP

#include <Eigen/Dense>
#include <vector>

namespace subrad {

struct GridDims {
  int nx = 1, ny = 1, nz = 1;
  int count() const { return nx * ny * nz; }
  bool operator==(const GridDims&) const = default;
};

/// Directed pairwise separation between two lattice sites.
/// xi = |k| r_{mu,nu} is the dimensionless spacing entering the kernels.
struct Separation {
  double xi;
  Eigen::Vector3d r_hat;
  Eigen::Vector3d r_vec;  // r_mu - r_nu, in units of lambda
};

/// A rectangular array of atoms. Positions are stored in units of the
/// transition wavelength, so the wave number is fixed at 2*pi. Site labels
/// are 1-based and increase first along x, then y, then z.
class Lattice {
 public:
  static Lattice rectangular(GridDims dims, double spacing,
                             const Eigen::Vector3d& d_hat = {1.0, 0.0, 0.0},
                             const Eigen::Vector3d& k_hat = {0.0, 0.0, 1.0});

  int atom_count() const { return static_cast<int>(positions_.size()); }
  const Eigen::Vector3d& position(int site) const;  // 1-based
  const std::vector<Eigen::Vector3d>& positions() const { return positions_; }

  const Eigen::Vector3d& dipole_axis() const { return d_hat_; }
  const Eigen::Vector3d& propagation_axis() const { return k_hat_; }
  double wave_number() const { return k_mag_; }
  Eigen::Vector3d wave_vector() const { return k_mag_ * k_hat_; }
  GridDims dims() const { return dims_; }
  double spacing() const { return spacing_; }

  Separation separation(int mu, int nu) const;  // 1-based, mu != nu

 private:
  Lattice() = default;

  std::vector<Eigen::Vector3d> positions_;
  Eigen::Vector3d d_hat_;
  Eigen::Vector3d k_hat_;
  double k_mag_ = 0.0;
  GridDims dims_;
  double spacing_ = 0.0;
};

}  // namespace subrad

#endif
