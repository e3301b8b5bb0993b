#include "hypmetric/witness.hpp"

#include <cmath>
#include <numbers>

#include "hypmetric/extrapolate.hpp"
#include "hypmetric/geometry.hpp"

namespace hypmetric {

namespace {

using std::numbers::pi;

void finish_geometric(WitnessLimit& w) {
  const auto& v = w.functional_values;
  w.trend_ok = differences_shrinking(v);
  const std::size_t n = v.size();
  w.extrapolated_limit = n >= 3 ? aitken(v[n - 3], v[n - 2], v[n - 1]) : (n ? v.back() : 0.0);
}

void check_unit_interval(double x) {
  if (!(x > 0.0 && x < 1.0)) throw Error(ErrorKind::OutsideDomain, "sample must lie in (0, 1)");
}

// (1 - x^2) phi*lambda_D(x) = N / D with e = 1 - x, and
// N - D = e^2 (-1/3 + e/12 + e^3/144).
double phi_rational_numerator(double e) { return -1.0 / 3.0 + e / 12.0 + e * e * e / 144.0; }
double phi_rational_denominator(double e) {
  return (1.0 - e * e / 12.0) * (2.0 - e + e * e * e / 12.0);
}

// log(s / e) with s = -log(1 - e).
double log_s_over_e(double e) {
  if (e > 0.1) return std::log(-std::log1p(-e) / e);
  double term = 1.0, sum = 0.0;
  for (int n = 1; n < 60; ++n) {
    term *= e;
    sum += term / (n + 1);
  }
  return std::log1p(sum);
}

// log(sin y / y).
double log_sinc(double y) {
  if (y > 0.5) return std::log(std::sin(y) / y);
  const double y2 = y * y;
  double term = 1.0, sum = 0.0;
  for (int k = 1; k < 20; ++k) {
    term *= -y2 / ((2.0 * k) * (2.0 * k + 1.0));
    sum += term;
  }
  return std::log1p(sum);
}

}  // namespace

HolomorphicMap phi_map() {
  return {[](Complex z) {
            const Complex w = z - 1.0;
            return z - w * w * w / 12.0;
          },
          [](Complex z) {
            const Complex w = z - 1.0;
            return 1.0 - w * w / 4.0;
          },
          "phi"};
}

HolomorphicMap example1_map() {
  return {[](Complex z) { return z * std::exp(-(1.0 + z) / (1.0 - z)); },
          [](Complex z) {
            const Complex d = 1.0 - z;
            return (1.0 - 4.0 * z + z * z) / (d * d) * std::exp(-(1.0 + z) / d);
          },
          "example1"};
}

WitnessLimit phi_expansion_check(std::span<const double> x_values) {
  WitnessLimit w;
  w.name = "phi_expansion";
  w.expected = -1.0 / 6.0;
  for (double x : x_values) {
    check_unit_interval(x);
    const double e = 1.0 - x;
    w.sample_points.emplace_back(x, 0.0);
    w.functional_values.push_back(phi_rational_numerator(e) / phi_rational_denominator(e));
  }
  finish_geometric(w);
  return w;
}

WitnessLimit disk_sharpness_limit(std::span<const double> x_values) {
  WitnessLimit w;
  w.name = "disk_sharpness";
  w.expected = -2.0 / 3.0;
  for (double x : x_values) {
    check_unit_interval(x);
    const double e = 1.0 - x;
    // e^{4 d_D(x, 0)} = ((1 + x) / (1 - x))^2.
    const double scale = (2.0 - e) * (2.0 - e);
    w.sample_points.emplace_back(x, 0.0);
    w.functional_values.push_back(phi_rational_numerator(e) / phi_rational_denominator(e) * scale);
  }
  finish_geometric(w);
  return w;
}

WitnessLimit example1_limit(std::span<const Complex> z_values) {
  WitnessLimit w;
  w.name = "example1";
  w.expected = -1.0;
  w.provenance = Provenance::Published;
  std::vector<double> u;
  for (Complex z : z_values) {
    const double m = std::abs(z);
    if (!(m > 0.0 && m < 1.0)) throw Error(ErrorKind::OutsideDomain, "sample must lie in 0 < |z| < 1");
    const double L = -std::log(m);
    const double d2 = std::norm(1.0 - z);
    const double a = std::abs(1.0 - 4.0 * z + z * z) / d2;
    const double b = (1.0 - m * m) / d2;
    // ratio - 1 = ((a - 1) L - b) / (L + b)
    w.sample_points.push_back(z);
    w.functional_values.push_back(((a - 1.0) * L - b) / (L + b) * L);
    u.push_back(1.0 / L);
  }
  w.trend_ok = differences_shrinking(w.functional_values);
  const auto& v = w.functional_values;
  w.extrapolated_limit = v.size() >= 3 ? polynomial_limit(u, v, 2) : (v.empty() ? 0.0 : v.back());
  return w;
}

double annulus_sharpness_constant(double r) {
  const double L = -std::log(r);
  return -1.0 / 3.0 - pi * pi / (6.0 * L * L);
}

WitnessLimit annulus_sharpness_limit(double r, std::span<const double> x_values, double x0) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::BadParameter, "annulus needs 0 < r < 1");
  if (x0 < 0.0) x0 = std::sqrt(r);
  if (!(x0 > r && x0 < 1.0)) throw Error(ErrorKind::OutsideDomain, "reference point outside the annulus");
  const double L = -std::log(r);
  const double s0 = -std::log(x0);
  const double shift = 0.5 * std::log(pi / (2.0 * L)) - 0.5 * std::log(std::tan(pi * s0 / (2.0 * L)));

  WitnessLimit w;
  w.name = "annulus_sharpness:" + std::to_string(r);
  w.expected = annulus_sharpness_constant(r);
  for (double x : x_values) {
    if (!(x > r && x < 1.0)) throw Error(ErrorKind::OutsideDomain, "sample outside the annulus");
    const double e = 1.0 - x;
    const double s = -std::log1p(-e);
    // phi*lambda_D / lambda_{A_r}
    //   = (1 - e^2/4) 2 x (s/e) sinc(pi s / L) / ((1 - e^2/12)(2 - e + e^3/12))
    const double log_ratio = std::log1p(-e * e / 4.0) + std::log1p(-e) + log_s_over_e(e) +
                             log_sinc(pi * s / L) - std::log1p(-e * e / 12.0) +
                             -std::log1p((-e + e * e * e / 12.0) / 2.0);
    const double d = dist_annulus(Complex(x, 0.0), Complex(x0, 0.0), r).value + shift;
    w.sample_points.emplace_back(x, 0.0);
    w.functional_values.push_back(std::expm1(log_ratio) * std::exp(4.0 * d));
  }
  finish_geometric(w);
  return w;
}

std::vector<double> approach_one(int k0, int k1) {
  std::vector<double> out;
  for (int k = k0; k <= k1; ++k) out.push_back(1.0 - std::pow(10.0, -k));
  return out;
}

}  // namespace hypmetric
