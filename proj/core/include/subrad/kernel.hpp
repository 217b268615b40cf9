#ifndef SUBRAD_KERNEL_HPP
#define SUBRAD_KERNEL_HPP

namespace subrad {

// Vacuum-mediated dipole-dipole kernels for a pair of two-level atoms at
// dimensionless separation xi = |k| r and orientation cos_dr = d_hat . r_hat.
// Both are returned in units of the single-atom decay rate Gamma.
//
//   F(xi) = (3/2) { (1 - c^2) sin(xi)/xi
//                 + (1 - 3c^2) (cos(xi)/xi^2 - sin(xi)/xi^3) }
//   G(xi) = (3/4) { -(1 - c^2) cos(xi)/xi
//                 + (1 - 3c^2) (sin(xi)/xi^2 + cos(xi)/xi^3) }
//
// F -> Gamma as xi -> 0; G diverges there, so xi must be positive.

double pair_decay_rate(double xi, double cos_dr);      // F
double pair_frequency_shift(double xi, double cos_dr);  // G

}  // namespace subrad

#endif
