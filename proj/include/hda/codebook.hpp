#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "hda/params.hpp"
#include "hda/schemes.hpp"

namespace hda {

// Desk-scale random-codebook realization of HDA Costa coding.
struct CodebookConfig {
  int block_n = 0;           // blocklength N
  double rate_r1_bits = 0.0; // codebook rate R1; M = 2^ceil(N*R1)
  double codeword_var = 0.0; // per-component variance P + alpha^2 Q + kappa^2 sigma_v^2
  std::uint64_t seed = 0;
};

struct Codebook {
  int n = 0;
  std::int64_t m = 0;
  std::vector<double> words;  // m x n, row-major

  std::span<const double> word(std::int64_t i) const {
    return {words.data() + i * n, static_cast<std::size_t>(n)};
  }
};

struct EncodeResult {
  std::int64_t index = 0;
  std::vector<double> x;
  double tx_power = 0.0;  // ||x||^2 / N, reported, never clamped
};

struct CodebookSimStats {
  double decode_error_rate = 0.0;
  double empirical_mse = 0.0;
  double mean_tx_power = 0.0;
  std::int64_t trials = 0;
  double mse_stderr = 0.0;
  double error_rate_stderr = 0.0;
};

// M i.i.d. Gaussian codewords; codeword i is drawn from the substream
// (seed, i) so generation order never matters. M is capped at 2^24.
Codebook build_codebook(const CodebookConfig& config);

// Joint-typicality proxy: pick the codeword whose residual x = u - alpha s -
// kappa v has empirical power closest to P.
EncodeResult encode(std::span<const double> v, std::span<const double> s, const Codebook& cb,
                    double alpha, double kappa, double p);

// Maximum-likelihood proxy under the jointly Gaussian (U, Y) model: nearest
// codeword to rho y with rho = E[UY]/E[Y^2].
std::int64_t decode(std::span<const double> y, const Codebook& cb, double rho);

// Full pipeline per trial: draw (v, s, w), encode, transmit, decode, estimate
// vhat = kappa sigma_v^2 / (P - eps) (u - alpha y). On a decode error the
// trial estimates with the wrong codeword unless zero_on_decode_error is set.
CodebookSimStats simulate(const CodebookConfig& config, const SchemeParams& params,
                          const CostaDesign& design, std::int64_t trials, std::uint64_t seed,
                          bool zero_on_decode_error = false);

// Serial streaming reference for tests and the benchmark.
CodebookSimStats simulate_reference(const CodebookConfig& config, const SchemeParams& params,
                                    const CostaDesign& design, std::int64_t trials,
                                    std::uint64_t seed, bool zero_on_decode_error = false);

}  // namespace hda
