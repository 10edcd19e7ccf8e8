#include "hda/mc.hpp"

#include <cmath>

#include "hda/numeric.hpp"
#include "hda/rng.hpp"
#include "hda/schemes.hpp"

namespace hda {

namespace {

struct TrialKernel {
  SchemeId scheme;
  double sd_vp, sd_z, sd_s, sd_x, sd_w;
  double alpha_s, kappa_vp, kappa_z;
  double analog_gain = 0.0;
  bool x_primitive = true;
  std::vector<Role> obs;
  std::vector<double> w;  // estimator coefficients, aligned with obs

  double run(GaussianStream& g) const {
    const double vp = g.normal(sd_vp);
    const double z = g.normal(sd_z);
    const double s = g.normal(sd_s);
    const double x = x_primitive ? g.normal(sd_x) : analog_gain * (vp + z);
    const double wn = g.normal(sd_w);
    const double v = vp + z;
    const double u = x + alpha_s * s + kappa_vp * vp + kappa_z * z;
    const double y = x + s + wn;

    double vhat = 0.0;
    for (std::size_t k = 0; k < obs.size(); ++k) {
      double o = 0.0;
      switch (obs[k]) {
        case Role::kVp: o = vp; break;
        case Role::kU: o = u; break;
        case Role::kY: o = y; break;
        default: throw contract_error("mc: unsupported observation role");
      }
      vhat += w[k] * o;
    }
    const double e = v - vhat;
    return e * e;
  }
};

TrialKernel make_kernel(const McConfig& config) {
  config.params.validate();
  if (config.trials < 1) throw contract_error("mc_validate: trials must be >= 1");

  const DesignCoeffs coeffs = design_coeffs_for(config.scheme, config.params, config.rate_bits);

  // estimator coefficients from the covariance at actual (or design) noise
  SchemeParams est_params = config.params;
  if (config.estimator == Estimator::kDesignClosedForm)
    est_params.actual_noise = est_params.design_noise;
  const JointModel est_model = build_joint_model(config.scheme, est_params, coeffs);
  const std::vector<Role> obs = observations_for(config.scheme);
  const LmmseResult est = lmmse_solve(extract_pair(est_model, Role::kV, obs),
                                      est_model.at(Role::kV, Role::kV));

  TrialKernel k;
  k.scheme = config.scheme;
  k.sd_vp = std::sqrt(config.params.source_var - coeffs.innovation_var);
  k.sd_z = std::sqrt(coeffs.innovation_var);
  k.sd_s = std::sqrt(config.params.interference_Q);
  k.sd_x = std::sqrt(config.params.power_P);
  k.sd_w = std::sqrt(config.params.actual_noise);
  k.alpha_s = coeffs.alpha_s;
  k.kappa_vp = coeffs.kappa_vp;
  k.kappa_z = coeffs.kappa_z;
  k.analog_gain = coeffs.analog_gain;
  k.x_primitive = (config.scheme != SchemeId::kNaiveAnalog);
  k.obs = obs;
  k.w = est.coefficients;
  return k;
}

}  // namespace

SimStats mc_validate(const McConfig& config) {
  const TrialKernel kernel = make_kernel(config);
  const std::int64_t n = config.trials;
  std::vector<double> sq(static_cast<std::size_t>(n));

#pragma omp parallel for schedule(static)
  for (std::int64_t i = 0; i < n; ++i) {
    GaussianStream g(config.seed, static_cast<std::uint64_t>(i));
    sq[static_cast<std::size_t>(i)] = kernel.run(g);
  }

  SimStats s;
  s.trials_run = n;
  s.empirical_d = pairwise_mean(sq);
  s.stderr_of_mean = pairwise_stderr(sq, s.empirical_d);
  return s;
}

SimStats mc_validate_reference(const McConfig& config) {
  const TrialKernel kernel = make_kernel(config);
  const std::int64_t n = config.trials;
  long double sum = 0.0L, sumsq = 0.0L;
  for (std::int64_t i = 0; i < n; ++i) {
    GaussianStream g(config.seed, static_cast<std::uint64_t>(i));
    const double d = kernel.run(g);
    sum += d;
    sumsq += static_cast<long double>(d) * d;
  }
  SimStats s;
  s.trials_run = n;
  s.empirical_d = static_cast<double>(sum / n);
  if (n > 1) {
    const long double var = (sumsq - sum * sum / n) / (n - 1);
    s.stderr_of_mean = static_cast<double>(std::sqrt(static_cast<double>(var) / n));
  }
  return s;
}

std::vector<SimStats> mc_sweep(std::span<const McConfig> configs) {
  std::vector<SimStats> out;
  out.reserve(configs.size());
  for (const McConfig& c : configs) out.push_back(mc_validate(c));
  return out;
}

double analytic_distortion(SchemeId scheme, const SchemeParams& params, double rate_bits) {
  params.validate();
  const double p = params.power_P, q = params.interference_Q, s2 = params.design_noise,
               sa2 = params.actual_noise, sv2 = params.source_var, sz2 = params.innovation_var;
  switch (scheme) {
    case SchemeId::kHdaCosta:
      return mismatch_source_distortion(p, q, s2, sa2, sv2);
    case SchemeId::kHdaWz:
      return wz_mismatch_bounds(p, s2, sa2, sz2).d_hda;
    case SchemeId::kCombined:
      return mismatch_source_distortion(p, q, s2, sa2, sz2);
    case SchemeId::kGenHda:
      return gen_hda_mismatch(p, q, s2, sa2, sv2, rate_bits).d_source;
    case SchemeId::kModified: {
      const ModifiedExponentDesign d = modified_exponent_design(p, q, s2, sz2);
      if (!d.feasible) throw infeasible_design_error("modified scheme infeasible");
      return modified_mismatch_distortion(p, q, sz2, sa2, d.kappa_e);
    }
    case SchemeId::kNaiveAnalog:
      // receiver-side MMSE knows the actual channel; scaled to the general
      // source variance (the verbatim closed form is the sv2 = 1 case)
      return sz2 / (1.0 + (p / (sv2 * sa2)) * sz2);
  }
  throw contract_error("unknown scheme id");
}

}  // namespace hda
