#include "hda/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hda {

SymMatrix::SymMatrix(int n) : n_(n) {
  if (n < 1 || n > kMaxDim) throw contract_error("SymMatrix dimension out of range");
  a_.fill(0.0);
}

double& SymMatrix::at(int i, int j) {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw contract_error("SymMatrix index out of range");
  return a_[static_cast<std::size_t>(i) * kMaxDim + j];
}

double SymMatrix::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= n_ || j >= n_) throw contract_error("SymMatrix index out of range");
  return a_[static_cast<std::size_t>(i) * kMaxDim + j];
}

SymMatrix::Eigen SymMatrix::eigen() const {
  Eigen e;
  e.n = n_;
  std::array<std::array<double, kMaxDim>, kMaxDim> m{};
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) m[i][j] = at(i, j);
  for (int i = 0; i < n_; ++i) {
    for (int j = 0; j < n_; ++j) e.vectors[i][j] = (i == j) ? 1.0 : 0.0;
  }

  for (int sweep = 0; sweep < 64; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < n_; ++p)
      for (int q = p + 1; q < n_; ++q) off += m[p][q] * m[p][q];
    if (off < 1e-30) break;
    for (int p = 0; p < n_; ++p) {
      for (int q = p + 1; q < n_; ++q) {
        const double apq = m[p][q];
        if (apq == 0.0) continue;
        const double theta = (m[q][q] - m[p][p]) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < n_; ++k) {
          const double mkp = m[k][p], mkq = m[k][q];
          m[k][p] = c * mkp - s * mkq;
          m[k][q] = s * mkp + c * mkq;
        }
        for (int k = 0; k < n_; ++k) {
          const double mpk = m[p][k], mqk = m[q][k];
          m[p][k] = c * mpk - s * mqk;
          m[q][k] = s * mpk + c * mqk;
        }
        for (int k = 0; k < n_; ++k) {
          const double vkp = e.vectors[k][p], vkq = e.vectors[k][q];
          e.vectors[k][p] = c * vkp - s * vkq;
          e.vectors[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::array<int, kMaxDim> order{};
  for (int i = 0; i < n_; ++i) order[i] = i;
  std::sort(order.begin(), order.begin() + n_, [&](int i, int j) { return m[i][i] < m[j][j]; });

  Eigen sorted;
  sorted.n = n_;
  for (int i = 0; i < n_; ++i) {
    sorted.values[i] = m[order[i]][order[i]];
    for (int r = 0; r < n_; ++r) sorted.vectors[r][i] = e.vectors[r][order[i]];
  }
  return sorted;
}

SymMatrix SymMatrix::pseudo_inverse() const {
  const Eigen e = eigen();
  double vmax = 0.0;
  for (int i = 0; i < n_; ++i) vmax = std::max(vmax, std::abs(e.values[i]));
  const double cutoff = 1e-12 * vmax;

  SymMatrix inv(n_);
  for (int i = 0; i < n_; ++i) {
    for (int j = i; j < n_; ++j) {
      double sum = 0.0;
      for (int k = 0; k < n_; ++k) {
        if (std::abs(e.values[k]) <= cutoff) continue;
        sum += e.vectors[i][k] * e.vectors[j][k] / e.values[k];
      }
      inv.at(i, j) = sum;
      inv.at(j, i) = sum;
    }
  }
  return inv;
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (int i = 0; i < n_; ++i) t += at(i, i);
  return t;
}

double SymMatrix::min_eigenvalue() const { return eigen().values[0]; }

LmmseResult lmmse_solve(const CovariancePair& pair, double target_var) {
  const int n = pair.lambda_mat.dim();
  if (static_cast<int>(pair.gamma_vec.size()) != n)
    throw contract_error("lmmse_solve: gamma length " + std::to_string(pair.gamma_vec.size()) +
                         " does not match lambda dimension " + std::to_string(n));
  if (!(target_var >= 0.0)) throw contract_error("lmmse_solve: target_var must be >= 0");

  const double lam_min = pair.lambda_mat.min_eigenvalue();
  if (lam_min < -1e-8 * std::max(pair.lambda_mat.trace(), 1e-300))
    throw invalid_covariance_error("lmmse_solve: observation covariance is indefinite");

  const SymMatrix inv = pair.lambda_mat.pseudo_inverse();
  LmmseResult r;
  r.coefficients.assign(static_cast<std::size_t>(n), 0.0);
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (int j = 0; j < n; ++j) sum += inv.at(i, j) * pair.gamma_vec[static_cast<std::size_t>(j)];
    r.coefficients[static_cast<std::size_t>(i)] = sum;
  }
  double explained = 0.0;
  for (int i = 0; i < n; ++i)
    explained += r.coefficients[static_cast<std::size_t>(i)] * pair.gamma_vec[static_cast<std::size_t>(i)];
  r.mmse = target_var - explained;

  const double tol = 1e-12 * std::max(1.0, target_var);
  if (r.mmse < 0.0 && r.mmse >= -tol) r.mmse = 0.0;
  if (r.mmse > target_var && r.mmse <= target_var + tol) r.mmse = target_var;
  return r;
}

}  // namespace hda
