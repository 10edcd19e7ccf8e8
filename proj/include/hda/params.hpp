#pragma once

#include <cmath>
#include <string>

#include "hda/errors.hpp"

namespace hda {

// All scalar physical parameters of one scenario.
//
// power_P        transmit power (linear)
// interference_Q interference variance (linear), 0 when absent
// source_var     sigma_v^2
// innovation_var sigma_z^2 in V = V' + Z; equals source_var when the decoder
//                has no side information
// design_noise   sigma^2 the coefficients are optimized for
// actual_noise   sigma_a^2 the channel actually has
// epsilon        rate-window slack (>= 0); distortion formulas are reported in
//                the epsilon -> 0 limit, designs accept epsilon > 0 only to
//                open the rate window
// bandwidth_ratio lambda = N/K (channel uses per source sample)
struct SchemeParams {
  double power_P = 1.0;
  double interference_Q = 0.0;
  double source_var = 1.0;
  double innovation_var = 1.0;
  double design_noise = 0.1;
  double actual_noise = 0.1;
  double epsilon = 0.0;
  double bandwidth_ratio = 1.0;

  void validate() const {
    if (!(power_P > 0.0)) throw contract_error("power_P must be > 0");
    if (!(interference_Q >= 0.0)) throw contract_error("interference_Q must be >= 0");
    if (!(source_var >= 0.0)) throw contract_error("source_var must be >= 0");
    if (!(innovation_var >= 0.0)) throw contract_error("innovation_var must be >= 0");
    if (!(innovation_var <= source_var + 1e-15 * source_var))
      throw contract_error("innovation_var must not exceed source_var (V = V' + Z)");
    if (!(design_noise > 0.0)) throw contract_error("design_noise must be > 0");
    if (!(actual_noise > 0.0)) throw contract_error("actual_noise must be > 0");
    if (!(epsilon >= 0.0)) throw contract_error("epsilon must be >= 0");
    if (!(bandwidth_ratio > 0.0 && bandwidth_ratio <= 1.0))
      throw contract_error("bandwidth_ratio must be in (0, 1]");
  }

  // Shannon capacity of the design-SNR channel, in bits per use.
  double capacity_bits() const { return 0.5 * std::log2(1.0 + power_P / design_noise); }
};

inline double snr_db_to_noise(double p, double snr_db) {
  return p / std::pow(10.0, snr_db / 10.0);
}

inline double noise_to_snr_db(double p, double noise) {
  return 10.0 * std::log10(p / noise);
}

}  // namespace hda
