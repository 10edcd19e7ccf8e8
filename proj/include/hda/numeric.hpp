#pragma once

#include <cmath>
#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "hda/errors.hpp"

namespace hda {

// Pairwise (cascade) summation. The reduction tree depends only on the array
// length, so results are identical no matter how many workers filled the
// array.
inline double pairwise_sum(std::span<const double> x) {
  const std::size_t n = x.size();
  if (n <= 64) {
    double s = 0.0;
    for (double v : x) s += v;
    return s;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

inline double pairwise_mean(std::span<const double> x) {
  return x.empty() ? 0.0 : pairwise_sum(x) / static_cast<double>(x.size());
}

// Standard error of the mean, reusing the deterministic pairwise tree.
inline double pairwise_stderr(std::span<const double> x, double mean) {
  const std::size_t n = x.size();
  if (n < 2) return 0.0;
  std::vector<double> dev(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double d = x[i] - mean;
    dev[i] = d * d;
  }
  const double var = pairwise_sum(dev) / static_cast<double>(n - 1);
  return std::sqrt(var / static_cast<double>(n));
}

// Golden-section minimization of a unimodal scalar function on [lo, hi].
inline double golden_section_minimize(const std::function<double(double)>& f, double lo,
                                      double hi, double tol = 1e-10) {
  if (!(lo < hi)) throw contract_error("golden_section_minimize: empty interval");
  const double invphi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = f(c), fd = f(d);
  while (b - a > tol) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

// Least-squares slope of y against x.
inline double least_squares_slope(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2)
    throw contract_error("least_squares_slope: need >= 2 matching points");
  const double n = static_cast<double>(x.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
    sxx += x[i] * x[i];
    sxy += x[i] * y[i];
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace hda
