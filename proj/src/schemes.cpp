#include "hda/schemes.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "hda/numeric.hpp"

namespace hda {

namespace {

double log2_ratio(double num, double den) { return 0.5 * std::log2(num / den); }

// shared denominator of the combined-scheme mismatch expressions
double mismatch_denominator(double p, double q, double s2, double sa2) {
  return p * p * (p + q) + p * (p + q) * s2 + q * s2 * s2 +
         (p * (2.0 * p + q) + 3.0 * p * s2 + s2 * s2) * sa2;
}

}  // namespace

double matched_optimum(double p, double noise, double src_var) {
  if (!(p >= 0.0)) throw contract_error("matched_optimum: P must be >= 0");
  if (!(noise > 0.0)) throw contract_error("matched_optimum: noise must be > 0");
  if (!(src_var >= 0.0)) throw contract_error("matched_optimum: src_var must be >= 0");
  return src_var / (1.0 + p / noise);
}

CostaDesign hda_costa_design(const SchemeParams& params) {
  params.validate();
  const double p = params.power_P, s2 = params.design_noise, q = params.interference_Q,
               sv2 = params.source_var, eps = params.epsilon;
  if (!(eps < p)) throw infeasible_design_error("hda_costa_design: epsilon >= P");
  const double kappa_sq = p * p / ((p + s2) * sv2) - eps / sv2;
  if (kappa_sq < 0.0) throw infeasible_design_error("hda_costa_design: kappa^2 < 0");

  CostaDesign d;
  d.alpha = p / (p + s2);
  d.kappa = std::sqrt(kappa_sq);
  const double var_u = p + d.alpha * d.alpha * q + kappa_sq * sv2;
  d.rate_lower = log2_ratio(var_u, p);
  d.rate_upper = log2_ratio(var_u, p - eps);
  d.estimator_gain = d.kappa * sv2 / p;
  return d;
}

GenHdaDesign gen_hda_design(const SchemeParams& params, double rate_bits) {
  params.validate();
  const double p = params.power_P, s2 = params.design_noise, sv2 = params.source_var,
               eps = params.epsilon;
  const double cap = params.capacity_bits();
  if (!(rate_bits >= 0.0)) throw contract_error("gen_hda_design: R must be >= 0");
  const double surplus = (p + s2) - s2 * std::exp2(2.0 * rate_bits);
  const double kappa1_sq = surplus / sv2 * (p / (p + s2) - eps / p);
  if (surplus < -1e-12 * (p + s2) || kappa1_sq < -1e-15)
    throw infeasible_design_error("gen_hda_design: R exceeds capacity (kappa1^2 < 0)");

  GenHdaDesign d;
  d.alpha = p / (p + s2);
  d.kappa1 = std::sqrt(std::max(kappa1_sq, 0.0));
  d.digital_rate = rate_bits;
  const double sigma_e2 = sv2 * std::exp2(-2.0 * rate_bits);
  const double resid = kappa1_sq * sigma_e2 + (1.0 - d.alpha) * (1.0 - d.alpha) * p +
                       d.alpha * d.alpha * s2;
  d.rate_margin = log2_ratio(p, resid) - rate_bits;
  (void)cap;
  return d;
}

SuperpositionCostaDesign superposition_costa_design(const SchemeParams& params,
                                                    double rate_bits) {
  params.validate();
  const double p = params.power_P, s2 = params.design_noise, sv2 = params.source_var,
               eps = params.epsilon;
  if (!(rate_bits >= 0.0)) throw contract_error("superposition_costa_design: R must be >= 0");
  SuperpositionCostaDesign d;
  d.rate_bits = rate_bits;
  d.power_costa = (p + s2) * (1.0 - std::exp2(-2.0 * rate_bits));
  d.power_hda = p - d.power_costa;  // = (P + sigma^2) 2^{-2R} - sigma^2
  if (d.power_hda <= 0.0)
    throw infeasible_design_error("superposition_costa_design: R >= C leaves no HDA power");
  d.alpha_c = d.power_costa / (d.power_costa + d.power_hda + s2);
  d.alpha_hc = d.power_hda / (d.power_hda + s2);
  const double sigma_e2 = sv2 * std::exp2(-2.0 * rate_bits);
  const double kappa_sq =
      d.power_hda * d.power_hda / ((d.power_hda + s2) * sigma_e2) - eps / sigma_e2;
  if (kappa_sq < 0.0) throw infeasible_design_error("superposition_costa_design: kappa^2 < 0");
  d.kappa = std::sqrt(kappa_sq);
  return d;
}

WzDesign hda_wz_design(const SchemeParams& params) {
  params.validate();
  const double p = params.power_P, s2 = params.design_noise, sv2 = params.source_var,
               sz2 = params.innovation_var, eps = params.epsilon;
  if (!(eps < p)) throw infeasible_design_error("hda_wz_design: epsilon >= P");
  if (!(sz2 > 0.0)) throw contract_error("hda_wz_design: sigma_z^2 must be > 0");
  const double kappa_sq = p * p / ((p + s2) * sz2) - eps / sz2;
  if (kappa_sq < 0.0) throw infeasible_design_error("hda_wz_design: kappa^2 < 0");

  WzDesign d;
  d.alpha = p / (p + s2);
  d.kappa = std::sqrt(kappa_sq);
  const double var_u = p + kappa_sq * sv2;
  d.rate_lower = log2_ratio(var_u, p);
  // I(U;V',Y): the residual kappa Z + (1-alpha) X - alpha W has variance P - eps
  const double resid = kappa_sq * sz2 + (1.0 - d.alpha) * (1.0 - d.alpha) * p +
                       d.alpha * d.alpha * s2;
  d.rate_upper = log2_ratio(var_u, resid);
  d.estimator_offset_gain = d.kappa * sz2 / p;
  return d;
}

SuperimposedWzDesign superimposed_wz_design(const SchemeParams& params, double rate_bits) {
  params.validate();
  const double p = params.power_P, s2 = params.design_noise, sz2 = params.innovation_var,
               eps = params.epsilon;
  if (!(rate_bits >= 0.0)) throw contract_error("superimposed_wz_design: R must be >= 0");
  SuperimposedWzDesign d;
  d.rate_bits = rate_bits;
  d.power_wz = (p + s2) * (1.0 - std::exp2(-2.0 * rate_bits));
  d.power_hda = (p + s2) * std::exp2(-2.0 * rate_bits) - s2;
  if (d.power_hda <= 0.0)
    throw infeasible_design_error("superimposed_wz_design: R >= C leaves no HDA power");
  const double sigma_e2 = sz2 * std::exp2(-2.0 * rate_bits);
  const double kappa1_sq =
      d.power_hda * d.power_hda / ((d.power_hda + s2) * sigma_e2) - eps / sigma_e2;
  if (kappa1_sq < 0.0) throw infeasible_design_error("superimposed_wz_design: kappa1^2 < 0");
  d.kappa1 = std::sqrt(kappa1_sq);
  d.composed_distortion = sigma_e2 * s2 / (d.power_hda + s2);
  return d;
}

CostaDesign combined_design(const SchemeParams& params) {
  params.validate();
  const double p = params.power_P, s2 = params.design_noise, q = params.interference_Q,
               sv2 = params.source_var, sz2 = params.innovation_var, eps = params.epsilon;
  if (!(eps < p)) throw infeasible_design_error("combined_design: epsilon >= P");
  if (!(sz2 > 0.0)) throw contract_error("combined_design: sigma_z^2 must be > 0");
  const double kappa_sq = p * p / ((p + s2) * sz2) - eps / sz2;
  if (kappa_sq < 0.0) throw infeasible_design_error("combined_design: kappa^2 < 0");

  CostaDesign d;
  d.alpha = p / (p + s2);
  d.kappa = std::sqrt(kappa_sq);
  const double var_u = p + d.alpha * d.alpha * q + kappa_sq * sv2;
  d.rate_lower = log2_ratio(var_u, p);
  const double resid = kappa_sq * sz2 + (1.0 - d.alpha) * (1.0 - d.alpha) * p +
                       d.alpha * d.alpha * s2;
  d.rate_upper = log2_ratio(var_u, resid);
  d.estimator_gain = d.kappa * sz2 / p;
  return d;
}

ModifiedExponentDesign modified_exponent_design(double p, double q, double design_noise,
                                                double innovation_var) {
  if (!(p > 0.0) || !(q >= 0.0) || !(design_noise > 0.0))
    throw contract_error("modified_exponent_design: bad parameters");
  if (!(innovation_var > 0.0))
    throw contract_error("modified_exponent_design: sigma_z^2 must be > 0");
  ModifiedExponentDesign d;
  const double num = p * p + p * q - q * design_noise;
  d.feasible = num > 0.0;
  if (d.feasible) d.kappa_e = std::sqrt(num / ((p + q + design_noise) * innovation_var));
  return d;
}

double mismatch_source_distortion(double p, double q, double sigma2, double sigma_a2,
                                  double innovation_var) {
  if (!(p > 0.0) || !(sigma2 > 0.0) || !(sigma_a2 > 0.0))
    throw contract_error("mismatch_source_distortion: P, sigma^2, sigma_a^2 must be > 0");
  if (!(q >= 0.0) || !(innovation_var >= 0.0))
    throw contract_error("mismatch_source_distortion: Q, sigma_z^2 must be >= 0");
  const double num =
      (q * sigma2 * sigma2 + (p * (p + q) + 2.0 * p * sigma2 + sigma2 * sigma2) * sigma_a2) *
      innovation_var;
  return num / mismatch_denominator(p, q, sigma2, sigma_a2);
}

double mismatch_interference_distortion(double p, double q, double sigma2, double sigma_a2) {
  if (!(p > 0.0) || !(sigma2 > 0.0) || !(sigma_a2 > 0.0))
    throw contract_error("mismatch_interference_distortion: P, sigma^2, sigma_a^2 must be > 0");
  if (!(q >= 0.0)) throw contract_error("mismatch_interference_distortion: Q must be >= 0");
  if (q == 0.0) return 0.0;
  const double num = q * (p + sigma2) * (p * p + (2.0 * p + sigma2) * sigma_a2);
  return num / mismatch_denominator(p, q, sigma2, sigma_a2);
}

MismatchReport gen_hda_mismatch(double p, double q, double sigma2, double sigma_a2,
                                double source_var, double rate_bits) {
  if (!(p > 0.0) || !(sigma2 > 0.0) || !(sigma_a2 > 0.0))
    throw contract_error("gen_hda_mismatch: P, sigma^2, sigma_a^2 must be > 0");
  const double cap = 0.5 * std::log2(1.0 + p / sigma2);
  if (rate_bits < 0.0 || rate_bits > cap + 1e-12)
    throw infeasible_design_error("gen_hda_mismatch: R outside [0, C]");
  const double g = std::exp2(2.0 * rate_bits);
  const double ps = sigma2 + p;
  const double den = ps * ps * (sigma_a2 + p + q) - g * (sigma2 - sigma_a2) * p * (sigma2 + p + q);

  MismatchReport r;
  r.d_source = (sigma_a2 * ps * ps + (sigma2 * sigma2 + sigma_a2 * p) * q) * source_var / den;
  r.d_interference = q == 0.0 ? 0.0
                              : ps * ((sigma2 + p) * (sigma_a2 + p) - g * (sigma2 - sigma_a2) * p) *
                                    q / den;
  return r;
}

WzMismatchBounds wz_mismatch_bounds(double p, double sigma2, double sigma_a2,
                                    double innovation_var) {
  if (!(p > 0.0) || !(sigma2 > 0.0) || !(sigma_a2 > 0.0))
    throw contract_error("wz_mismatch_bounds: P, sigma^2, sigma_a^2 must be > 0");
  if (!(innovation_var >= 0.0)) throw contract_error("wz_mismatch_bounds: sigma_z^2 must be >= 0");
  WzMismatchBounds b;
  b.d_hda = (p + sigma2) * sigma_a2 * innovation_var /
            (p * p + (2.0 * p + sigma2) * sigma_a2);
  b.d_lower = innovation_var / (1.0 + p / sigma_a2);
  b.d_separation = innovation_var * sigma2 / (p + sigma2);
  b.gap_db = std::abs(10.0 * std::log10(p / (p + sigma2)));
  b.decode_threshold_exceeded = sigma_a2 > sigma2;
  return b;
}

double naive_analog_distortion(double p, double noise, double innovation_var) {
  if (!(p > 0.0) || !(noise > 0.0))
    throw contract_error("naive_analog_distortion: P, noise must be > 0");
  if (!(innovation_var >= 0.0))
    throw contract_error("naive_analog_distortion: sigma_z^2 must be >= 0");
  return innovation_var / (1.0 + (p / noise) * innovation_var);
}

double modified_mismatch_distortion(double p, double q, double innovation_var, double sigma_a2,
                                    double kappa_e) {
  if (!(p > 0.0) || !(q >= 0.0) || !(sigma_a2 > 0.0) || !(innovation_var >= 0.0))
    throw contract_error("modified_mismatch_distortion: bad parameters");
  const double pq = p + q;
  return pq * sigma_a2 * innovation_var /
         (pq * sigma_a2 + kappa_e * kappa_e * (pq + sigma_a2) * innovation_var);
}

double exponent_estimate(const std::function<double(double)>& distortion_curve, double lo,
                         double hi) {
  if (!(lo > 0.0) || !(lo < hi)) throw contract_error("exponent_estimate: need 0 < lo < hi");
  constexpr int kPoints = 20;
  std::vector<double> lx(kPoints), ly(kPoints);
  const double ratio = std::pow(hi / lo, 1.0 / (kPoints - 1));
  double x = lo;
  for (int i = 0; i < kPoints; ++i, x *= ratio) {
    const double d = distortion_curve(x);
    if (!(d > 0.0))
      throw contract_error("exponent_estimate: nonpositive distortion at sigma_a^2 = " +
                           std::to_string(x));
    lx[static_cast<std::size_t>(i)] = std::log(x);
    ly[static_cast<std::size_t>(i)] = std::log(d);
  }
  return least_squares_slope(lx, ly);
}

double digital_baseline_distortion(double p, double sigma2, double sigma_a2, double src_var) {
  return sigma_a2 <= sigma2 ? matched_optimum(p, sigma2, src_var) : src_var;
}

}  // namespace hda
