#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "hda/errors.hpp"

namespace hda {

// Small dense symmetric matrix, capacity 8. Everything in this project is a
// covariance over at most eight jointly Gaussian roles, so no general-purpose
// linear algebra is needed.
class SymMatrix {
 public:
  static constexpr int kMaxDim = 8;

  SymMatrix() = default;
  explicit SymMatrix(int n);

  int dim() const { return n_; }
  double& at(int i, int j);
  double at(int i, int j) const;

  // Cyclic Jacobi eigendecomposition. Eigenvalues ascending; the i-th column
  // of the returned rotation holds the i-th eigenvector.
  struct Eigen {
    std::array<double, kMaxDim> values{};
    std::array<std::array<double, kMaxDim>, kMaxDim> vectors{};  // [row][col]
    int n = 0;
  };
  Eigen eigen() const;

  // Moore-Penrose pseudo-inverse with singular-value cutoff
  // 1e-12 * max |eigenvalue|; exact inverse when full rank.
  SymMatrix pseudo_inverse() const;

  double trace() const;
  double min_eigenvalue() const;

 private:
  int n_ = 0;
  std::array<double, kMaxDim * kMaxDim> a_{};
};

// Observation covariance Lambda plus cross-correlation Gamma between the
// estimation target and the observation vector.
struct CovariancePair {
  SymMatrix lambda_mat;
  std::vector<double> gamma_vec;
};

struct LmmseResult {
  std::vector<double> coefficients;  // Lambda^+ Gamma
  double mmse = 0.0;                 // target_var - Gamma^T Lambda^+ Gamma
};

// Linear MMSE solve. Rank-deficient Lambda is handled by the pseudo-inverse;
// an indefinite Lambda (eigenvalue < -1e-8 * trace) is rejected. mmse is
// clamped to [0, target_var] when within 1e-12 * max(1, target_var) outside.
LmmseResult lmmse_solve(const CovariancePair& pair, double target_var);

}  // namespace hda
