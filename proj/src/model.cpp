#include "hda/model.hpp"

#include <cmath>

#include "hda/schemes.hpp"

namespace hda {

std::string to_string(SchemeId id) {
  switch (id) {
    case SchemeId::kHdaCosta: return "hda-costa";
    case SchemeId::kHdaWz: return "hda-wz";
    case SchemeId::kCombined: return "combined";
    case SchemeId::kGenHda: return "gen-hda";
    case SchemeId::kModified: return "modified";
    case SchemeId::kNaiveAnalog: return "naive";
  }
  throw contract_error("unknown scheme id");
}

SchemeId scheme_from_string(const std::string& name) {
  if (name == "hda-costa") return SchemeId::kHdaCosta;
  if (name == "hda-wz") return SchemeId::kHdaWz;
  if (name == "combined") return SchemeId::kCombined;
  if (name == "gen-hda") return SchemeId::kGenHda;
  if (name == "modified") return SchemeId::kModified;
  if (name == "naive") return SchemeId::kNaiveAnalog;
  throw contract_error("unknown scheme name: " + name);
}

DesignCoeffs design_coeffs_for(SchemeId scheme, const SchemeParams& params, double rate_bits) {
  params.validate();
  DesignCoeffs c;
  switch (scheme) {
    case SchemeId::kHdaCosta: {
      const CostaDesign d = hda_costa_design(params);
      // no side information: V' has zero variance, kappa multiplies all of V
      c.alpha_s = d.alpha;
      c.kappa_vp = d.kappa;
      c.kappa_z = d.kappa;
      c.innovation_var = params.source_var;
      break;
    }
    case SchemeId::kHdaWz: {
      const WzDesign d = hda_wz_design(params);
      c.alpha_s = 0.0;
      c.kappa_vp = d.kappa;
      c.kappa_z = d.kappa;
      c.innovation_var = params.innovation_var;
      break;
    }
    case SchemeId::kCombined: {
      const CostaDesign d = combined_design(params);
      c.alpha_s = d.alpha;
      c.kappa_vp = d.kappa;
      c.kappa_z = d.kappa;
      c.innovation_var = params.innovation_var;
      break;
    }
    case SchemeId::kGenHda: {
      const GenHdaDesign d = gen_hda_design(params, rate_bits);
      // the digital layer conveys V*, the HDA layer embeds only E
      c.alpha_s = d.alpha;
      c.kappa_vp = 0.0;
      c.kappa_z = d.kappa1;
      c.innovation_var = params.source_var * std::exp2(-2.0 * rate_bits);
      break;
    }
    case SchemeId::kModified: {
      const ModifiedExponentDesign d = modified_exponent_design(
          params.power_P, params.interference_Q, params.design_noise, params.innovation_var);
      if (!d.feasible)
        throw infeasible_design_error("modified scheme infeasible: P(P+Q) <= Q sigma^2");
      c.alpha_s = 1.0;
      c.kappa_vp = d.kappa_e;
      c.kappa_z = d.kappa_e;
      c.innovation_var = params.innovation_var;
      break;
    }
    case SchemeId::kNaiveAnalog: {
      c.innovation_var = params.innovation_var;
      c.analog_gain = std::sqrt(params.power_P / params.source_var);
      break;
    }
  }
  return c;
}

JointModel build_joint_model(SchemeId scheme, const SchemeParams& params,
                             const DesignCoeffs& coeffs) {
  params.validate();
  if (!std::isfinite(coeffs.kappa_z) || !std::isfinite(coeffs.kappa_vp))
    throw infeasible_design_error("build_joint_model: non-finite design coefficients");
  if (coeffs.innovation_var < 0.0 || coeffs.innovation_var > params.source_var + 1e-12)
    throw infeasible_design_error("build_joint_model: innovation variance out of range");

  JointModel m;
  m.scheme = scheme;
  m.coeffs = coeffs;
  m.x_is_primitive = (scheme != SchemeId::kNaiveAnalog);

  const double var_z = coeffs.innovation_var;
  const double var_vp = params.source_var - var_z;
  const double q = params.interference_Q;
  const double p = params.power_P;
  const double var_w = params.actual_noise;

  // covariance over the primitive roles (V', Z, S, X, W); everything else is
  // a linear image, so filling rows by linearity keeps the algebra exact
  auto& cv = m.cov;
  auto idx = [](Role r) { return static_cast<int>(r); };
  const int V = idx(Role::kV), Vp = idx(Role::kVp), Z = idx(Role::kZ), S = idx(Role::kS),
            X = idx(Role::kX), W = idx(Role::kW), U = idx(Role::kU), Y = idx(Role::kY);

  for (auto& row : cv) row.fill(0.0);
  cv[Vp][Vp] = var_vp;
  cv[Z][Z] = var_z;
  cv[S][S] = q;
  cv[W][W] = var_w;

  // linear map rows: each derived role as coefficients over (Vp, Z, S, X, W)
  struct Lin {
    double vp, z, s, x, w;
  };
  const Lin lin_x = m.x_is_primitive ? Lin{0, 0, 0, 1, 0}
                                     : Lin{coeffs.analog_gain, coeffs.analog_gain, 0, 0, 0};
  const Lin lin_v{1, 1, 0, 0, 0};
  const Lin lin_u{coeffs.kappa_vp + lin_x.vp, coeffs.kappa_z + lin_x.z, coeffs.alpha_s + lin_x.s,
                  lin_x.x, lin_x.w};
  const Lin lin_y{lin_x.vp, lin_x.z, 1.0 + lin_x.s, lin_x.x, 1.0 + lin_x.w};

  if (m.x_is_primitive) cv[X][X] = p;

  auto dot = [&](const Lin& a, const Lin& b) {
    return a.vp * b.vp * var_vp + a.z * b.z * var_z + a.s * b.s * q +
           a.x * b.x * (m.x_is_primitive ? p : 0.0) + a.w * b.w * var_w;
  };
  auto basis = [&](int role) -> Lin {
    if (role == Vp) return {1, 0, 0, 0, 0};
    if (role == Z) return {0, 1, 0, 0, 0};
    if (role == S) return {0, 0, 1, 0, 0};
    if (role == X) return lin_x;
    if (role == W) return {0, 0, 0, 0, 1};
    if (role == V) return lin_v;
    if (role == U) return lin_u;
    return lin_y;
  };
  for (int i = 0; i < kRoleCount; ++i)
    for (int j = 0; j < kRoleCount; ++j) cv[i][j] = dot(basis(i), basis(j));

  return m;
}

std::vector<Role> observations_for(SchemeId scheme) {
  switch (scheme) {
    case SchemeId::kHdaCosta:
      return {Role::kU, Role::kY};
    case SchemeId::kNaiveAnalog:
      return {Role::kVp, Role::kY};
    default:
      return {Role::kVp, Role::kU, Role::kY};
  }
}

CovariancePair extract_pair(const JointModel& model, Role target,
                            const std::vector<Role>& observations) {
  const int n = static_cast<int>(observations.size());
  CovariancePair pair;
  pair.lambda_mat = SymMatrix(n);
  pair.gamma_vec.resize(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    pair.gamma_vec[static_cast<std::size_t>(i)] =
        model.at(target, observations[static_cast<std::size_t>(i)]);
    for (int j = 0; j < n; ++j)
      pair.lambda_mat.at(i, j) = model.at(observations[static_cast<std::size_t>(i)],
                                          observations[static_cast<std::size_t>(j)]);
  }
  return pair;
}

}  // namespace hda
