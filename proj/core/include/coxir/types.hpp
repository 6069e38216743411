#pragma once

#include <algorithm>
#include <cmath>
#include <complex>

namespace coxir {

using Complex = std::complex<double>;

// Default threshold for rank decisions and approximate comparisons.
inline constexpr double kDefaultTol = 1e-9;

// Mixed absolute/relative comparison: |a - b| <= tol * (1 + max(|a|,|b|)).
inline bool close(Complex a, Complex b, double tol = kDefaultTol) {
  const double scale = std::max(std::abs(a), std::abs(b));
  return std::abs(a - b) <= tol * (1.0 + scale);
}

inline bool close(double a, double b, double tol = kDefaultTol) {
  return close(Complex(a, 0.0), Complex(b, 0.0), tol);
}

}  // namespace coxir
