#include "hypmetric/extrapolate.hpp"

#include <cmath>
#include <vector>

#include "hypmetric/error.hpp"

namespace hypmetric {

double aitken(double a0, double a1, double a2) {
  const double d1 = a1 - a0;
  const double d2 = a2 - a1;
  const double dd = d2 - d1;
  if (dd == 0.0 || !std::isfinite(dd)) return a2;
  return a2 - d2 * d2 / dd;
}

double polynomial_limit(std::span<const double> u, std::span<const double> values, int degree) {
  const std::size_t n = u.size();
  const std::size_t m = static_cast<std::size_t>(degree) + 1;
  if (values.size() != n || n < m) throw Error(ErrorKind::TooFewPoints, "polynomial fit needs more samples");

  // Normal equations on the scaled abscissa; m is tiny (<= 4).
  double scale = 0.0;
  for (double v : u) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) scale = 1.0;
  std::vector<double> a(m * m, 0.0), b(m, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<double> pw(m, 1.0);
    for (std::size_t k = 1; k < m; ++k) pw[k] = pw[k - 1] * (u[i] / scale);
    for (std::size_t r = 0; r < m; ++r) {
      b[r] += pw[r] * values[i];
      for (std::size_t c = 0; c < m; ++c) a[r * m + c] += pw[r] * pw[c];
    }
  }
  // Gaussian elimination with partial pivoting.
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < m; ++r)
      if (std::abs(a[r * m + col]) > std::abs(a[piv * m + col])) piv = r;
    if (piv != col) {
      for (std::size_t c = 0; c < m; ++c) std::swap(a[col * m + c], a[piv * m + c]);
      std::swap(b[col], b[piv]);
    }
    for (std::size_t r = col + 1; r < m; ++r) {
      const double f = a[r * m + col] / a[col * m + col];
      for (std::size_t c = col; c < m; ++c) a[r * m + c] -= f * a[col * m + c];
      b[r] -= f * b[col];
    }
  }
  std::vector<double> coef(m);
  for (std::size_t r = m; r-- > 0;) {
    double s = b[r];
    for (std::size_t c = r + 1; c < m; ++c) s -= a[r * m + c] * coef[c];
    coef[r] = s / a[r * m + r];
  }
  return coef[0];
}

bool differences_shrinking(std::span<const double> values, std::size_t window) {
  if (values.size() < 3) return false;
  window = std::min(window, values.size());
  const auto tail = values.subspan(values.size() - window);
  double prev = std::abs(tail[1] - tail[0]);
  for (std::size_t i = 2; i < tail.size(); ++i) {
    const double d = std::abs(tail[i] - tail[i - 1]);
    if (d > prev) return false;
    prev = d;
  }
  return true;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (n < 2 || y.size() != n) throw Error(ErrorKind::TooFewPoints, "line fit needs two points");
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0) throw Error(ErrorKind::DegenerateSample, "abscissae coincide");
  const double slope = sxy / sxx;
  const double r2 = syy == 0.0 ? 1.0 : (sxy * sxy) / (sxx * syy);
  return {slope, my - slope * mx, r2};
}

}  // namespace hypmetric
