#pragma once

#include <array>
#include <string>
#include <vector>

#include "hda/linalg.hpp"
#include "hda/params.hpp"

namespace hda {

// The coding schemes whose jointly Gaussian models the laboratory builds.
enum class SchemeId {
  kHdaCosta,      // U = X + aS + kV, no receiver side information
  kHdaWz,         // U = X + kV,      side information V', no interference
  kCombined,      // U = X + aS + kV, side information V'
  kGenHda,        // U = X + aS + k1 E, decoded digital part plays V'
  kModified,      // U = X + S + ke V (alpha = 1), side information V'
  kNaiveAnalog,   // X = sqrt(P/sigma_v^2) V, no codebook
};

std::string to_string(SchemeId id);
SchemeId scheme_from_string(const std::string& name);

// Named Gaussian variables of a scheme model. V' and Z are the side
// information split V = V' + Z; for the generalized hybrid scheme V' is the
// decoded reconstruction V* and Z the quantization error E.
enum class Role : int { kV = 0, kVp, kZ, kS, kX, kW, kU, kY };
constexpr int kRoleCount = 8;

// Design coefficients sufficient to assemble any scheme's covariance.
// U = X + alpha_s * S + kappa_vp * V' + kappa_z * Z.
struct DesignCoeffs {
  double alpha_s = 0.0;
  double kappa_vp = 0.0;
  double kappa_z = 0.0;
  double innovation_var = 0.0;  // var(Z) in the model (sigma_z^2, or sigma_e^2)
  double analog_gain = 0.0;     // naive only: X = analog_gain * V
};

// Full covariance over (V, V', Z, S, X, W, U, Y) with the defining linear
// maps kept alongside so tests can verify the derived rows exactly.
struct JointModel {
  SchemeId scheme;
  std::array<std::array<double, kRoleCount>, kRoleCount> cov{};
  DesignCoeffs coeffs;
  bool x_is_primitive = true;  // false for naive analog transmission

  double at(Role a, Role b) const { return cov[static_cast<int>(a)][static_cast<int>(b)]; }
};

// Assembles the scheme covariance with X independent of (S, V) (except the
// naive scheme, where X is the scaled source) and W having variance
// actual_noise. Throws infeasible_design_error when the coefficients are not
// consistent with the parameters.
JointModel build_joint_model(SchemeId scheme, const SchemeParams& params,
                             const DesignCoeffs& coeffs);

// Design coefficients for a scheme at the given parameters (epsilon -> 0 for
// everything except the explicit rate window, per the design ops).
// rate_bits is the digital rate R of the generalized hybrid scheme.
DesignCoeffs design_coeffs_for(SchemeId scheme, const SchemeParams& params,
                               double rate_bits = 0.0);

// The observation subset the scheme's decoder estimates the source from.
std::vector<Role> observations_for(SchemeId scheme);

// Lambda/Gamma extraction for an arbitrary target/observation subset.
CovariancePair extract_pair(const JointModel& model, Role target,
                            const std::vector<Role>& observations);

}  // namespace hda
