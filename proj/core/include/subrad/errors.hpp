#ifndef SUBRAD_ERRORS_HPP
#define SUBRAD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace subrad {

/// Invalid run configuration (bad file, bad field, inconsistent values).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A numerical routine failed to meet its accuracy contract.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what, double residual = 0.0)
      : std::runtime_error(what), residual_(residual) {}
  double residual() const { return residual_; }

 private:
  double residual_;
};

}  // namespace subrad

#endif
