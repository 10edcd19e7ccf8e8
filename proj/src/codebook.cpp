#include "hda/codebook.hpp"

#include <cmath>
#include <cstring>

#include "hda/model.hpp"
#include "hda/numeric.hpp"
#include "hda/rng.hpp"

namespace hda {

namespace {

constexpr std::int64_t kMaxCodewords = std::int64_t{1} << 24;

std::int64_t codeword_count(const CodebookConfig& c) {
  if (c.block_n < 1) throw contract_error("codebook: block_n must be >= 1");
  if (!(c.rate_r1_bits >= 0.0)) throw contract_error("codebook: rate must be >= 0");
  if (!(c.codeword_var > 0.0)) throw contract_error("codebook: codeword_var must be > 0");
  const double bits = std::ceil(static_cast<double>(c.block_n) * c.rate_r1_bits);
  if (bits > 24.0) throw resource_error("codebook: M = 2^" + std::to_string(bits) +
                                        " exceeds the 2^24 desk-scale cap");
  return std::int64_t{1} << static_cast<int>(bits);
}

struct TrialResult {
  double err = 0.0;  // 0/1 decode mismatch
  double mse = 0.0;
  double tx = 0.0;
};

struct SimKernel {
  const Codebook* cb;
  int n;
  double sd_v, sd_s, sd_w;
  double alpha, kappa, p;
  double rho, gain;
  bool zero_on_error;

  TrialResult run(std::uint64_t seed, std::int64_t trial) const {
    GaussianStream g(seed, static_cast<std::uint64_t>(trial));
    std::vector<double> v(static_cast<std::size_t>(n)), s(static_cast<std::size_t>(n)),
        y(static_cast<std::size_t>(n));
    for (auto& e : v) e = g.normal(sd_v);
    for (auto& e : s) e = g.normal(sd_s);
    const EncodeResult enc = encode(v, s, *cb, alpha, kappa, p);
    for (int i = 0; i < n; ++i)
      y[static_cast<std::size_t>(i)] =
          enc.x[static_cast<std::size_t>(i)] + s[static_cast<std::size_t>(i)] + g.normal(sd_w);
    const std::int64_t dec = decode(y, *cb, rho);

    TrialResult r;
    r.err = dec != enc.index ? 1.0 : 0.0;
    r.tx = enc.tx_power;
    const std::span<const double> u = cb->word(dec);
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double vhat = (zero_on_error && dec != enc.index)
                              ? 0.0
                              : gain * (u[static_cast<std::size_t>(i)] -
                                        alpha * y[static_cast<std::size_t>(i)]);
      const double e = v[static_cast<std::size_t>(i)] - vhat;
      acc += e * e;
    }
    r.mse = acc / n;
    return r;
  }
};

SimKernel make_sim_kernel(const Codebook& cb, const SchemeParams& params,
                          const CostaDesign& design, bool zero_on_error) {
  params.validate();
  SimKernel k;
  k.cb = &cb;
  k.n = cb.n;
  k.sd_v = std::sqrt(params.source_var);
  k.sd_s = std::sqrt(params.interference_Q);
  k.sd_w = std::sqrt(params.actual_noise);
  k.alpha = design.alpha;
  k.kappa = design.kappa;
  k.p = params.power_P;
  // rho from the scheme covariance at the actual noise
  DesignCoeffs coeffs;
  coeffs.alpha_s = design.alpha;
  coeffs.kappa_vp = design.kappa;
  coeffs.kappa_z = design.kappa;
  coeffs.innovation_var = params.source_var;
  const JointModel model = build_joint_model(SchemeId::kHdaCosta, params, coeffs);
  k.rho = model.at(Role::kU, Role::kY) / model.at(Role::kY, Role::kY);
  k.gain = design.kappa * params.source_var / (params.power_P - params.epsilon);
  k.zero_on_error = zero_on_error;
  return k;
}

CodebookSimStats reduce_stats(std::span<const double> err, std::span<const double> mse,
                              std::span<const double> tx) {
  CodebookSimStats st;
  st.trials = static_cast<std::int64_t>(err.size());
  st.decode_error_rate = pairwise_mean(err);
  st.empirical_mse = pairwise_mean(mse);
  st.mean_tx_power = pairwise_mean(tx);
  st.mse_stderr = pairwise_stderr(mse, st.empirical_mse);
  st.error_rate_stderr =
      std::sqrt(st.decode_error_rate * (1.0 - st.decode_error_rate) / static_cast<double>(st.trials));
  return st;
}

}  // namespace

Codebook build_codebook(const CodebookConfig& config) {
  const std::int64_t m = codeword_count(config);
  Codebook cb;
  cb.n = config.block_n;
  cb.m = m;
  cb.words.resize(static_cast<std::size_t>(m) * config.block_n);
  const double sd = std::sqrt(config.codeword_var);

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < m; ++i) {
    GaussianStream g(config.seed, static_cast<std::uint64_t>(i));
    double* row = cb.words.data() + i * cb.n;
    for (int j = 0; j < cb.n; ++j) row[j] = g.normal(sd);
  }
  return cb;
}

EncodeResult encode(std::span<const double> v, std::span<const double> s, const Codebook& cb,
                    double alpha, double kappa, double p) {
  const int n = cb.n;
  if (static_cast<int>(v.size()) != n || static_cast<int>(s.size()) != n)
    throw contract_error("encode: block length mismatch");

  std::vector<double> t(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    t[static_cast<std::size_t>(i)] =
        alpha * s[static_cast<std::size_t>(i)] + kappa * v[static_cast<std::size_t>(i)];

  std::int64_t best = 0;
  double best_score = 0.0, best_power = 0.0;
  for (std::int64_t m = 0; m < cb.m; ++m) {
    const double* u = cb.words.data() + m * n;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = u[i] - t[static_cast<std::size_t>(i)];
      acc += d * d;
    }
    const double power = acc / n;
    const double score = std::abs(power - p);
    if (m == 0 || score < best_score) {
      best = m;
      best_score = score;
      best_power = power;
    }
  }

  EncodeResult r;
  r.index = best;
  r.tx_power = best_power;
  r.x.resize(static_cast<std::size_t>(n));
  const double* u = cb.words.data() + best * n;
  for (int i = 0; i < n; ++i) r.x[static_cast<std::size_t>(i)] = u[i] - t[static_cast<std::size_t>(i)];
  return r;
}

std::int64_t decode(std::span<const double> y, const Codebook& cb, double rho) {
  const int n = cb.n;
  if (static_cast<int>(y.size()) != n) throw contract_error("decode: block length mismatch");
  std::int64_t best = 0;
  double best_dist = 0.0;
  for (std::int64_t m = 0; m < cb.m; ++m) {
    const double* u = cb.words.data() + m * n;
    double acc = 0.0;
    for (int i = 0; i < n; ++i) {
      const double d = u[i] - rho * y[static_cast<std::size_t>(i)];
      acc += d * d;
    }
    if (m == 0 || acc < best_dist) {
      best = m;
      best_dist = acc;
    }
  }
  return best;
}

CodebookSimStats simulate(const CodebookConfig& config, const SchemeParams& params,
                          const CostaDesign& design, std::int64_t trials, std::uint64_t seed,
                          bool zero_on_decode_error) {
  if (trials < 1) throw contract_error("simulate: trials must be >= 1");
  const Codebook cb = build_codebook(config);
  const SimKernel kernel = make_sim_kernel(cb, params, design, zero_on_decode_error);

  std::vector<double> err(static_cast<std::size_t>(trials)), mse(static_cast<std::size_t>(trials)),
      tx(static_cast<std::size_t>(trials));
#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < trials; ++i) {
    const TrialResult r = kernel.run(seed, i);
    err[static_cast<std::size_t>(i)] = r.err;
    mse[static_cast<std::size_t>(i)] = r.mse;
    tx[static_cast<std::size_t>(i)] = r.tx;
  }
  return reduce_stats(err, mse, tx);
}

CodebookSimStats simulate_reference(const CodebookConfig& config, const SchemeParams& params,
                                    const CostaDesign& design, std::int64_t trials,
                                    std::uint64_t seed, bool zero_on_decode_error) {
  if (trials < 1) throw contract_error("simulate: trials must be >= 1");
  const Codebook cb = build_codebook(config);
  const SimKernel kernel = make_sim_kernel(cb, params, design, zero_on_decode_error);

  std::vector<double> err(static_cast<std::size_t>(trials)), mse(static_cast<std::size_t>(trials)),
      tx(static_cast<std::size_t>(trials));
  for (std::int64_t i = 0; i < trials; ++i) {
    const TrialResult r = kernel.run(seed, i);
    err[static_cast<std::size_t>(i)] = r.err;
    mse[static_cast<std::size_t>(i)] = r.mse;
    tx[static_cast<std::size_t>(i)] = r.tx;
  }
  return reduce_stats(err, mse, tx);
}

}  // namespace hda
