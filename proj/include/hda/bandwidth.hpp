#pragma once

#include <string>
#include <vector>

#include "hda/params.hpp"

namespace hda {

// Bandwidth-compression encoders (unit total power, lambda = N/K < 1):
// analog systematic layer of power a plus a digital layer carrying the
// remaining source samples.
enum class BcMode { kSuperposition, kDigitalCosta, kHdaCosta };

std::string to_string(BcMode mode);
BcMode bc_mode_from_string(const std::string& name);

struct BcAllocation {
  double a_star = 0.0;
  double d_star = 0.0;
  BcMode mode = BcMode::kSuperposition;
};

// Matched end-to-end distortion D(a) of a mode; the explicit objective the
// closed-form optimum minimizes.
double bc_objective(BcMode mode, double sigma2, double lambda, double a);

// Closed-form optimal systematic power fraction and distortion.
BcAllocation bc_optimal_power(double sigma2, double lambda, BcMode mode);

// Distortion under SNR mismatch at systematic power a. For actual noise above
// the design noise the digital layer is lost and contributes full variance;
// below, the HDA variant is defined for lambda = 1/2 only.
double bc_mismatch_distortion(BcMode mode, double sigma2, double sigma_a2, double lambda,
                              double a);

// ---------------------------------------------------------------------------
// Three-layer broadcast to two users (lambda = 1/2, unit source variance,
// unit total power): analog systematic (power a), HDA Costa for the weak user
// (power b), Wyner-Ziv + digital Costa refinement for the strong user
// (power c = 1 - a - b).
// ---------------------------------------------------------------------------

struct BroadcastPowers {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double alpha1 = 0.0;   // b / (b + c + sigma1^2)
  double alpha2 = 0.0;   // c / (c + sigma2^2)
  double kappa_c = 0.0;  // HDA-layer embedding gain
};

struct RegionPoint {
  double d1 = 0.0;  // weak user
  double d2 = 0.0;  // strong user
  BroadcastPowers powers;
};

RegionPoint broadcast_point(double a, double b, double sigma1_sq, double sigma2_sq);

// Pareto frontier of (D1, D2) over the simplex grid {a, b >= 0, a + b <= 1}
// with grid_n points per axis, sorted by D1 ascending.
std::vector<RegionPoint> broadcast_region(double sigma1_sq, double sigma2_sq, int grid_n);

}  // namespace hda
