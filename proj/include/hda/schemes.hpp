#pragma once

#include <functional>

#include "hda/model.hpp"
#include "hda/params.hpp"

namespace hda {

// ---------------------------------------------------------------------------
// Closed-form designs. Rates are in bits. All estimator gains and squared
// embedding coefficients are reported in the epsilon -> 0 limit; epsilon
// enters only the rate-window width (rate_upper - rate_lower).
// ---------------------------------------------------------------------------

struct CostaDesign {
  double alpha = 0.0;           // P / (P + sigma^2)
  double kappa = 0.0;           // source embedding gain
  double rate_lower = 0.0;      // I(U;S,V) in bits
  double rate_upper = 0.0;      // I(U;Y) in bits
  double estimator_gain = 0.0;  // kappa sigma_v^2 / P
};

struct WzDesign {
  double kappa = 0.0;
  double alpha = 0.0;                  // P / (P + sigma^2)
  double rate_lower = 0.0;             // I(U;V)
  double rate_upper = 0.0;             // I(U;V',Y)
  double estimator_offset_gain = 0.0;  // kappa sigma_z^2 / P
};

struct GenHdaDesign {
  double alpha = 0.0;
  double kappa1 = 0.0;
  double digital_rate = 0.0;  // R in bits
  double rate_margin = 0.0;   // [I(U;Y) - I(U;S,E)] - R in bits
};

struct SuperpositionCostaDesign {
  double power_costa = 0.0;  // P_C
  double power_hda = 0.0;    // P_HC
  double alpha_c = 0.0;
  double alpha_hc = 0.0;
  double kappa = 0.0;
  double rate_bits = 0.0;
};

struct SuperimposedWzDesign {
  double power_wz = 0.0;   // P_WZ
  double power_hda = 0.0;  // P_HWZ
  double kappa1 = 0.0;
  double rate_bits = 0.0;
  double composed_distortion = 0.0;  // sigma_z^2 / (1 + P/sigma^2)
};

struct ModifiedExponentDesign {
  double kappa_e = 0.0;  // defined only when feasible
  bool feasible = false;
};

struct MismatchReport {
  double d_source = 0.0;
  double d_interference = 0.0;
};

struct WzMismatchBounds {
  double d_hda = 0.0;
  double d_lower = 0.0;
  double d_separation = 0.0;
  double gap_db = 0.0;
  bool decode_threshold_exceeded = false;  // actual noise above design noise
};

// D_opt = src_var / (1 + P/noise)
double matched_optimum(double p, double noise, double src_var);

CostaDesign hda_costa_design(const SchemeParams& params);
GenHdaDesign gen_hda_design(const SchemeParams& params, double rate_bits);
SuperpositionCostaDesign superposition_costa_design(const SchemeParams& params, double rate_bits);
WzDesign hda_wz_design(const SchemeParams& params);
SuperimposedWzDesign superimposed_wz_design(const SchemeParams& params, double rate_bits);
CostaDesign combined_design(const SchemeParams& params);
ModifiedExponentDesign modified_exponent_design(double p, double q, double design_noise,
                                                double innovation_var);

// ---------------------------------------------------------------------------
// SNR-mismatch distortion algebra (design noise sigma2, actual noise
// sigma_a2, decoder-side LMMSE adapted to the actual noise).
// ---------------------------------------------------------------------------

// Combined interference + side information source distortion D_a.
double mismatch_source_distortion(double p, double q, double sigma2, double sigma_a2,
                                  double innovation_var);

// Interference estimation error D_sa of the HDA Costa scheme (from U and Y).
double mismatch_interference_distortion(double p, double q, double sigma2, double sigma_a2);

// Generalized hybrid scheme: D_va(R) and D_sa(R).
MismatchReport gen_hda_mismatch(double p, double q, double sigma2, double sigma_a2,
                                double source_var, double rate_bits);

// HDA Wyner-Ziv actual distortion, genie lower bound, separation value and the
// high-SNR gap |10 log10(P/(P+sigma^2))| in dB.
WzMismatchBounds wz_mismatch_bounds(double p, double sigma2, double sigma_a2,
                                    double innovation_var);

// Uncoded transmission with receiver-side MMSE from (Y, V'); the closed form
// assumes a unit-variance source.
double naive_analog_distortion(double p, double noise, double innovation_var);

// Modified (alpha = 1) scheme distortion at actual noise sigma_a2.
double modified_mismatch_distortion(double p, double q, double innovation_var, double sigma_a2,
                                    double kappa_e);

// Least-squares slope of log D versus log sigma_a^2 over a 20-point geometric
// grid on [lo, hi]; the desk-scale distortion exponent zeta.
double exponent_estimate(const std::function<double(double)>& distortion_curve, double lo,
                         double hi);

// Threshold model of the separation-based digital baseline for comparison
// sweeps: matched distortion while decodable, source variance beyond.
double digital_baseline_distortion(double p, double sigma2, double sigma_a2, double src_var);

}  // namespace hda
