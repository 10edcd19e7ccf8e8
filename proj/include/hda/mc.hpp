#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hda/model.hpp"
#include "hda/params.hpp"

namespace hda {

// Which estimator the sampled decoder applies.
//   kActualNoiseLmmse  LMMSE coefficients from the scheme covariance at the
//                      actual noise (the mismatch-analysis estimator; equals
//                      the published closed form when matched)
//   kDesignClosedForm  coefficients frozen at the design noise
enum class Estimator { kActualNoiseLmmse, kDesignClosedForm };

struct McConfig {
  SchemeId scheme = SchemeId::kHdaCosta;
  SchemeParams params;
  double rate_bits = 0.0;  // generalized hybrid scheme only
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
  Estimator estimator = Estimator::kActualNoiseLmmse;
};

struct SimStats {
  double empirical_d = 0.0;
  double stderr_of_mean = 0.0;
  std::int64_t trials_run = 0;
};

// Samples the scheme's jointly Gaussian variables under the genie assumption
// (auxiliary codeword known at the decoder), applies the estimator, and
// returns the empirical distortion. Deterministic for fixed (seed, trials,
// scheme, params) and identical for any worker count: trial i draws from a
// substream derived from (seed, i) and the mean is reduced pairwise.
SimStats mc_validate(const McConfig& config);

// Plain streaming serial implementation kept as the reference the parallel
// kernel is tested and benchmarked against.
SimStats mc_validate_reference(const McConfig& config);

// Per-config results identical to individual mc_validate calls.
std::vector<SimStats> mc_sweep(std::span<const McConfig> configs);

// Closed-form mismatch distortion the empirical result is compared against.
double analytic_distortion(SchemeId scheme, const SchemeParams& params, double rate_bits = 0.0);

}  // namespace hda
