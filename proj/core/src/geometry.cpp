#include "subrad/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace subrad {

Lattice Lattice::rectangular(GridDims dims, double spacing,
                             const Eigen::Vector3d& d_hat,
                             const Eigen::Vector3d& k_hat) {
  if (dims.nx < 1 || dims.ny < 1 || dims.nz < 1)
    throw std::invalid_argument("Lattice: every dimension must be >= 1");
  if (!(spacing > 0.0))
    throw std::invalid_argument("Lattice: spacing must be positive");
  if (d_hat.norm() == 0.0 || k_hat.norm() == 0.0)
    throw std::invalid_argument("Lattice: d_hat and k_hat must be nonzero");

  Lattice lat;
  lat.dims_ = dims;
  lat.spacing_ = spacing;
  lat.d_hat_ = d_hat.normalized();
  lat.k_hat_ = k_hat.normalized();
  lat.k_mag_ = 2.0 * std::numbers::pi;
  lat.positions_.reserve(static_cast<std::size_t>(dims.count()));
  // Label i+1 sits at grid index i = ix + iy*nx + iz*nx*ny.
  for (int iz = 0; iz < dims.nz; ++iz)
    for (int iy = 0; iy < dims.ny; ++iy)
      for (int ix = 0; ix < dims.nx; ++ix)
        lat.positions_.emplace_back(spacing * ix, spacing * iy, spacing * iz);
  return lat;
}

const Eigen::Vector3d& Lattice::position(int site) const {
  if (site < 1 || site > atom_count())
    throw std::invalid_argument("Lattice: site label " + std::to_string(site) +
                                " outside [1, " + std::to_string(atom_count()) +
                                "]");
  return positions_[static_cast<std::size_t>(site - 1)];
}

Separation Lattice::separation(int mu, int nu) const {
  if (mu == nu)
    throw std::invalid_argument("Lattice: separation requires mu != nu");
  const Eigen::Vector3d r_vec = position(mu) - position(nu);
  const double r = r_vec.norm();
  return Separation{k_mag_ * r, r_vec / r, r_vec};
}

}  // namespace subrad
