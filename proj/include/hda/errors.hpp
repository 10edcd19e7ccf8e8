#pragma once

#include <stdexcept>
#include <string>

namespace hda {

// Precondition / dimension violations on the public surface.
class contract_error : public std::invalid_argument {
 public:
  explicit contract_error(const std::string& what) : std::invalid_argument(what) {}
};

// An observation covariance that is not (numerically) positive semidefinite.
class invalid_covariance_error : public std::runtime_error {
 public:
  explicit invalid_covariance_error(const std::string& what) : std::runtime_error(what) {}
};

// A design whose coefficients are not real (e.g. kappa^2 < 0) or whose rate
// request exceeds capacity.
class infeasible_design_error : public std::runtime_error {
 public:
  explicit infeasible_design_error(const std::string& what) : std::runtime_error(what) {}
};

// A configuration the implementation deliberately does not support.
class unsupported_configuration_error : public std::runtime_error {
 public:
  explicit unsupported_configuration_error(const std::string& what) : std::runtime_error(what) {}
};

// Desk-scale resource caps (codebook size).
class resource_error : public std::runtime_error {
 public:
  explicit resource_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hda
