#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "subrad/geometry.hpp"

using namespace subrad;
namespace pi = std::numbers;

TEST_CASE("1D chain runs along z with the requested spacing") {
  const Lattice lat = Lattice::rectangular({1, 1, 16}, 0.25);
  REQUIRE(lat.atom_count() == 16);
  for (int s = 1; s <= 16; ++s) {
    CHECK(lat.position(s).x() == 0.0);
    CHECK(lat.position(s).y() == 0.0);
    CHECK(lat.position(s).z() == doctest::Approx(0.25 * (s - 1)));
  }
  CHECK(lat.wave_number() == doctest::Approx(2.0 * pi::pi));
}

TEST_CASE("single atom sits at the origin") {
  const Lattice lat = Lattice::rectangular({1, 1, 1}, 0.5);
  REQUIRE(lat.atom_count() == 1);
  CHECK(lat.position(1).norm() == 0.0);
}

TEST_CASE("site labels increase first along x, then y, then z") {
  const Lattice lat = Lattice::rectangular({4, 4, 1}, 0.25);
  REQUIRE(lat.atom_count() == 16);
  CHECK(lat.position(5).isApprox(Eigen::Vector3d(0.0, 0.25, 0.0)));
  CHECK(lat.position(2).isApprox(Eigen::Vector3d(0.25, 0.0, 0.0)));

  const Lattice cuboid = Lattice::rectangular({2, 2, 4}, 0.25);
  // label = 1 + ix + iy*nx + iz*nx*ny
  CHECK(cuboid.position(1 + 1 + 1 * 2 + 2 * 4)
            .isApprox(Eigen::Vector3d(0.25, 0.25, 0.5)));
}

TEST_CASE("axes are normalized on construction") {
  const Lattice lat = Lattice::rectangular({1, 1, 2}, 0.1,
                                           Eigen::Vector3d(2.0, 0.0, 0.0),
                                           Eigen::Vector3d(0.0, 0.0, -7.0));
  CHECK(std::abs(lat.dipole_axis().norm() - 1.0) < 1e-12);
  CHECK(std::abs(lat.propagation_axis().norm() - 1.0) < 1e-12);
  CHECK(lat.propagation_axis().z() == doctest::Approx(-1.0));
}

TEST_CASE("construction errors") {
  CHECK_THROWS_AS(Lattice::rectangular({0, 1, 1}, 0.25), std::invalid_argument);
  CHECK_THROWS_AS(Lattice::rectangular({1, 1, 2}, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Lattice::rectangular({1, 1, 2}, -0.1), std::invalid_argument);
  CHECK_THROWS_AS(
      Lattice::rectangular({1, 1, 2}, 0.25, Eigen::Vector3d::Zero()),
      std::invalid_argument);
  CHECK_THROWS_AS(
      Lattice::rectangular({1, 1, 2}, 0.25, Eigen::Vector3d(1, 0, 0),
                           Eigen::Vector3d::Zero()),
      std::invalid_argument);
}

TEST_CASE("pairwise separations") {
  SUBCASE("adjacent sites of a quarter-wavelength chain") {
    const Lattice lat = Lattice::rectangular({1, 1, 16}, 0.25);
    CHECK(lat.separation(1, 2).xi == doctest::Approx(pi::pi / 2));
  }
  SUBCASE("chain ends at one tenth wavelength") {
    const Lattice lat = Lattice::rectangular({1, 1, 16}, 0.1);
    CHECK(lat.separation(1, 16).xi == doctest::Approx(3.0 * pi::pi));
  }
  SUBCASE("swap flips the direction, not the distance") {
    const Lattice lat = Lattice::rectangular({3, 2, 2}, 0.3);
    const Separation fwd = lat.separation(2, 9);
    const Separation rev = lat.separation(9, 2);
    CHECK(fwd.xi == doctest::Approx(rev.xi));
    CHECK(fwd.r_vec.isApprox(-rev.r_vec));
    CHECK(fwd.r_hat.isApprox(-rev.r_hat));
  }
  SUBCASE("coincident labels are rejected") {
    const Lattice lat = Lattice::rectangular({2, 1, 1}, 0.3);
    CHECK_THROWS_AS(lat.separation(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(lat.separation(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(lat.separation(1, 3), std::invalid_argument);
  }
}

TEST_CASE("a line has constant anisotropy") {
  const Lattice lat = Lattice::rectangular({1, 1, 8}, 0.4);
  const double expected = lat.dipole_axis().dot(Eigen::Vector3d(0, 0, 1));
  for (int mu = 1; mu <= 8; ++mu)
    for (int nu = 1; nu <= 8; ++nu) {
      if (mu == nu) continue;
      const double c = lat.dipole_axis().dot(lat.separation(mu, nu).r_hat);
      CHECK(std::abs(c) == doctest::Approx(std::abs(expected)));
    }
}
