#include "hda/bandwidth.hpp"

#include <algorithm>
#include <cmath>

#include "hda/errors.hpp"
#include "hda/linalg.hpp"

namespace hda {

namespace {

void check_bc_args(double sigma2, double lambda) {
  if (!(sigma2 > 0.0)) throw contract_error("bandwidth: sigma^2 must be > 0");
  if (!(lambda > 0.0 && lambda <= 1.0)) throw contract_error("bandwidth: lambda must be in (0, 1]");
}

// distortion of the digital layer carrying (1-lambda) of the source through a
// channel of capacity 0.5*log2(1 + snr) per use
double digital_layer_distortion(double snr, double lambda) {
  if (lambda >= 1.0) return 0.0;
  return std::pow(1.0 + snr, -lambda / (1.0 - lambda));
}

double lmmse_mmse_2x2(const SymMatrix& lam, const std::vector<double>& gam, double tvar) {
  return lmmse_solve(CovariancePair{lam, gam}, tvar).mmse;
}

// systematic-layer observation covariance of [Y, U] for the Costa-coded
// digital layer designed at sigma2 and received at sigma_a2
SymMatrix costa_obs_cov(double a, double sigma2, double sigma_a2, double kappa_sq) {
  const double alpha = (1.0 - a) / (1.0 - a + sigma2);
  SymMatrix m(2);
  m.at(0, 0) = 1.0 + sigma_a2;
  m.at(0, 1) = m.at(1, 0) = (1.0 - a) + alpha * a;
  m.at(1, 1) = (1.0 - a) + alpha * alpha * a + kappa_sq;
  return m;
}

}  // namespace

std::string to_string(BcMode mode) {
  switch (mode) {
    case BcMode::kSuperposition: return "superposition";
    case BcMode::kDigitalCosta: return "digital-costa";
    case BcMode::kHdaCosta: return "hda-costa";
  }
  throw contract_error("unknown bc mode");
}

BcMode bc_mode_from_string(const std::string& name) {
  if (name == "superposition") return BcMode::kSuperposition;
  if (name == "digital-costa") return BcMode::kDigitalCosta;
  if (name == "hda-costa") return BcMode::kHdaCosta;
  throw contract_error("unknown bc mode: " + name);
}

double bc_objective(BcMode mode, double sigma2, double lambda, double a) {
  check_bc_args(sigma2, lambda);
  if (!(a >= 0.0 && a <= 1.0)) throw contract_error("bc_objective: a must be in [0, 1]");
  if (mode == BcMode::kSuperposition) {
    // digital layer decoded with the systematic part as noise, then cancelled
    return lambda / (1.0 + a / sigma2) +
           (1.0 - lambda) * digital_layer_distortion((1.0 - a) / (a + sigma2), lambda);
  }
  // Costa modes: the digital layer pre-cancels the systematic interference
  return lambda / (1.0 + a / (1.0 - a + sigma2)) +
         (1.0 - lambda) * digital_layer_distortion((1.0 - a) / sigma2, lambda);
}

BcAllocation bc_optimal_power(double sigma2, double lambda, BcMode mode) {
  check_bc_args(sigma2, lambda);
  BcAllocation r;
  r.mode = mode;
  r.d_star = std::pow(1.0 + 1.0 / sigma2, -lambda);
  if (mode == BcMode::kSuperposition) {
    r.a_star = sigma2 * (std::pow(1.0 + 1.0 / sigma2, lambda) - 1.0);
  } else {
    r.a_star = (1.0 + sigma2) * (1.0 - r.d_star);
  }
  return r;
}

double bc_mismatch_distortion(BcMode mode, double sigma2, double sigma_a2, double lambda,
                              double a) {
  check_bc_args(sigma2, lambda);
  if (!(sigma_a2 > 0.0)) throw contract_error("bc_mismatch_distortion: sigma_a^2 must be > 0");
  if (!(a >= 0.0 && a <= 1.0)) throw contract_error("bc_mismatch_distortion: a must be in [0, 1]");
  if (mode == BcMode::kHdaCosta && std::abs(lambda - 0.5) > 1e-12)
    throw unsupported_configuration_error("bc hda-costa mode is defined for lambda = 1/2 only");

  if (sigma_a2 > sigma2) {
    // the digital layer cannot be decoded and contributes full source variance
    return lambda / (1.0 + a / (1.0 - a + sigma_a2)) + (1.0 - lambda);
  }

  switch (mode) {
    case BcMode::kSuperposition:
      return lambda / (1.0 + a / sigma_a2) +
             (1.0 - lambda) * digital_layer_distortion((1.0 - a) / (a + sigma2), lambda);
    case BcMode::kDigitalCosta: {
      const double alpha = (1.0 - a) / (1.0 - a + sigma2);
      const SymMatrix m = costa_obs_cov(a, sigma2, sigma_a2, 0.0);
      const std::vector<double> g{std::sqrt(a), alpha * std::sqrt(a)};
      return lambda * lmmse_mmse_2x2(m, g, 1.0) +
             (1.0 - lambda) * digital_layer_distortion((1.0 - a) / sigma2, lambda);
    }
    case BcMode::kHdaCosta: {
      const double alpha = (1.0 - a) / (1.0 - a + sigma2);
      const double kappa_sq = (1.0 - a) * (1.0 - a) / (1.0 - a + sigma2);
      const SymMatrix m = costa_obs_cov(a, sigma2, sigma_a2, kappa_sq);
      const std::vector<double> g1{std::sqrt(a), alpha * std::sqrt(a)};
      const std::vector<double> g2{0.0, std::sqrt(kappa_sq)};
      return lambda * lmmse_mmse_2x2(m, g1, 1.0) + (1.0 - lambda) * lmmse_mmse_2x2(m, g2, 1.0);
    }
  }
  throw contract_error("unknown bc mode");
}

RegionPoint broadcast_point(double a, double b, double sigma1_sq, double sigma2_sq) {
  if (!(a >= 0.0 && b >= 0.0 && a + b <= 1.0 + 1e-12))
    throw contract_error("broadcast_point: need a, b >= 0 and a + b <= 1");
  if (!(sigma1_sq > sigma2_sq) || !(sigma2_sq > 0.0))
    throw contract_error("broadcast_point: need sigma1^2 > sigma2^2 > 0 (user 1 weak)");

  RegionPoint pt;
  auto& pw = pt.powers;
  pw.a = a;
  pw.b = b;
  pw.c = std::max(0.0, 1.0 - a - b);
  pw.alpha1 = b / (b + pw.c + sigma1_sq);
  pw.alpha2 = pw.c / (pw.c + sigma2_sq);
  pw.kappa_c = b / std::sqrt(b + pw.c + sigma1_sq);

  pt.d1 = 0.5 / (1.0 + a / (b + pw.c + sigma1_sq)) + 0.5 / (1.0 + b / (pw.c + sigma1_sq));

  // strong user: estimate both halves from [Y, U1]; the third layer refines
  // the non-systematic half by its Wyner-Ziv factor
  SymMatrix m(2);
  m.at(0, 0) = 1.0 + sigma2_sq;
  m.at(0, 1) = m.at(1, 0) = b + pw.alpha1 * a;
  m.at(1, 1) = b + pw.alpha1 * pw.alpha1 * a + pw.kappa_c * pw.kappa_c;
  const std::vector<double> g1{std::sqrt(a), pw.alpha1 * std::sqrt(a)};
  const std::vector<double> g2{0.0, pw.kappa_c};
  pt.d2 = 0.5 * lmmse_mmse_2x2(m, g1, 1.0) +
          0.5 / (1.0 + pw.c / sigma2_sq) * lmmse_mmse_2x2(m, g2, 1.0);
  return pt;
}

std::vector<RegionPoint> broadcast_region(double sigma1_sq, double sigma2_sq, int grid_n) {
  if (grid_n < 2) throw contract_error("broadcast_region: grid_n must be >= 2");

  // flatten the simplex grid so cells are independent and index-addressed
  std::vector<std::pair<double, double>> cells;
  cells.reserve(static_cast<std::size_t>(grid_n) * (grid_n + 1) / 2);
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n - i; ++j) {
      cells.emplace_back(static_cast<double>(i) / (grid_n - 1),
                         static_cast<double>(j) / (grid_n - 1));
    }
  }
  std::vector<RegionPoint> pts(cells.size());
#pragma omp parallel for schedule(static)
  for (long long k = 0; k < static_cast<long long>(cells.size()); ++k) {
    const auto [a, b] = cells[static_cast<std::size_t>(k)];
    pts[static_cast<std::size_t>(k)] = broadcast_point(a, b, sigma1_sq, sigma2_sq);
  }

  std::sort(pts.begin(), pts.end(), [](const RegionPoint& x, const RegionPoint& y) {
    if (x.d1 != y.d1) return x.d1 < y.d1;
    if (x.d2 != y.d2) return x.d2 < y.d2;
    if (x.powers.a != y.powers.a) return x.powers.a < y.powers.a;
    return x.powers.b < y.powers.b;
  });

  // keep the best d2 per d1 and drop anything strictly dominated in both
  std::vector<RegionPoint> front;
  for (const RegionPoint& p : pts) {
    if (!front.empty() && front.back().d1 == p.d1) continue;
    if (!front.empty() && p.d2 > front.back().d2) continue;
    front.push_back(p);
  }
  return front;
}

}  // namespace hda
