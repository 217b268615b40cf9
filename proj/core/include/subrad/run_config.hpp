#ifndef SUBRAD_RUN_CONFIG_HPP
#define SUBRAD_RUN_CONFIG_HPP

#include <Eigen/Dense>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "subrad/analysis.hpp"
#include "subrad/geometry.hpp"

namespace subrad {

enum class EvolutionPath { eigen, ode, krylov };
enum class FitSelection { anchored, free_intercept, both };

std::string to_string(EvolutionPath path);
std::string to_string(FitSelection sel);

/// One run, fully determined by a flat `key = value` config file.
///
///   dims = 1,1,16          # N_x,N_y,N_z
///   spacing_lambda = 0.1
///   m = 2                  # excitation number
///   n = 45                 # imprint index (optional)
///   d_hat = 1,0,0
///   k_hat = 0,0,1
///   t_max_gamma = 60
///   n_time_points = 2000
///   fit_window = 5,40      # optional
///   fit_mode = both        # anchored | free | both
///   evolution_path = eigen # eigen | ode | krylov
///   krylov_dim = 30
///   output_dir = out
struct RunConfig {
  GridDims dims{1, 1, 1};
  double spacing_lambda = 0.25;
  int excitations = 1;
  std::optional<std::size_t> imprint_index;
  Eigen::Vector3d d_hat{1.0, 0.0, 0.0};
  Eigen::Vector3d k_hat{0.0, 0.0, 1.0};
  double t_max_gamma = 60.0;
  std::size_t n_time_points = 2000;
  std::optional<FitWindow> fit_window;
  FitSelection fit_mode = FitSelection::both;
  EvolutionPath evolution_path = EvolutionPath::eigen;
  int krylov_dim = 30;
  std::string output_dir = ".";
};

/// Parses and validates; throws ConfigError carrying one line per bad field.
RunConfig parse_run_config(std::istream& in);
RunConfig load_run_config(const std::string& path);

}  // namespace subrad

#endif
