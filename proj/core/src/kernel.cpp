#include "subrad/kernel.hpp"

#include <cmath>
#include <stdexcept>

namespace subrad {

namespace {

void check_args(double xi, double cos_dr) {
  if (!(xi > 0.0))
    throw std::invalid_argument("pair kernel: xi must be positive");
  if (std::abs(cos_dr) > 1.0 + 1e-12)
    throw std::invalid_argument("pair kernel: |d_hat . r_hat| must be <= 1");
}

}  // namespace

double pair_decay_rate(double xi, double cos_dr) {
  check_args(xi, cos_dr);
  const double c2 = cos_dr * cos_dr;
  const double s = std::sin(xi), c = std::cos(xi);
  return 1.5 * ((1.0 - c2) * s / xi +
                (1.0 - 3.0 * c2) * (c / (xi * xi) - s / (xi * xi * xi)));
}

double pair_frequency_shift(double xi, double cos_dr) {
  check_args(xi, cos_dr);
  const double c2 = cos_dr * cos_dr;
  const double s = std::sin(xi), c = std::cos(xi);
  return 0.75 * (-(1.0 - c2) * c / xi +
                 (1.0 - 3.0 * c2) * (s / (xi * xi) + c / (xi * xi * xi)));
}

}  // namespace subrad
