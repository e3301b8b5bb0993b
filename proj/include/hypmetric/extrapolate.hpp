#pragma once

#include <span>

namespace hypmetric {

/// Aitken delta-squared estimate from three consecutive terms; falls back to
/// the last term when the second difference vanishes.
double aitken(double a0, double a1, double a2);

/// Limit at u = 0 of the polynomial of degree `degree` fitted (least squares)
/// to (u_i, value_i). Used for functionals whose error is a power series in
/// u = 1 / log(1/|z|).
double polynomial_limit(std::span<const double> u, std::span<const double> values, int degree);

/// True when the consecutive differences of the last `window` terms shrink
/// monotonically in magnitude.
bool differences_shrinking(std::span<const double> values, std::size_t window = 4);

struct LineFit {
  double slope;
  double intercept;
  double r2;
};

/// Ordinary least squares line through (x_i, y_i).
LineFit fit_line(std::span<const double> x, std::span<const double> y);

}  // namespace hypmetric
