#include "hypmetric/inequalities.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "hypmetric/curvature.hpp"
#include "hypmetric/extrapolate.hpp"
#include "hypmetric/sampling.hpp"

namespace hypmetric {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();

void require_punctured(Complex z) {
  const double m = std::abs(z);
  if (m == 0.0) throw Error(ErrorKind::SingularPoint, "z = 0 is the puncture");
  if (!(m < 1.0)) throw Error(ErrorKind::OutsideDomain, "need 0 < |z| < 1");
}

std::vector<double> toward_zero(std::span<const double> moduli) {
  std::vector<double> out(moduli.begin(), moduli.end());
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double log_ratio(const MetricDensity& metric, const MetricDensity& reference, Complex z) {
  const double a = metric.log_at(z);
  const double b = reference.log_at(z);
  if (!std::isfinite(b)) throw Error(ErrorKind::NonpositiveDensity, "reference density vanishes");
  if (a == kNegInf) return kNegInf;
  return a - b;
}

}  // namespace

std::string_view to_string(LimitBehavior b) {
  switch (b) {
    case LimitBehavior::Converged: return "Converged";
    case LimitBehavior::DivergesToMinusInfinity: return "DivergesToMinusInfinity";
    case LimitBehavior::Nonconvergent: return "NonconvergentFunctional";
  }
  return "?";
}

double max_ratio(const MetricDensity& metric, const MetricDensity& reference,
                 std::span<const Complex> points) {
  double best = kNegInf;
  for (Complex z : points) best = std::max(best, log_ratio(metric, reference, z));
  return std::exp(best);
}

VerificationReport ahlfors_check(const MetricDensity& metric, const MetricDensity& reference,
                                 std::span<const Complex> points) {
  const bool closed = metric.origin() == MetricDensity::Origin::ClosedForm &&
                      reference.origin() == MetricDensity::Origin::ClosedForm;
  const double tol = closed ? 1e-12 : 1e-9;
  VerificationReport report;
  report.suite = "ahlfors";
  report.add(check_at_most("max_ratio_minus_one[" + metric.label() + " vs " + reference.label() + "]",
                           max_ratio(metric, reference, points) - 1.0, 0.0, tol,
                           Provenance::Published));
  return report;
}

double beardon_minda_bound(double fq, double d) {
  if (!(fq >= 0.0 && fq <= 1.0)) throw Error(ErrorKind::BadParameter, "distortion must lie in [0, 1]");
  if (!(d >= 0.0)) throw Error(ErrorKind::BadParameter, "distance must be nonnegative");
  const double t = std::tanh(2.0 * d);
  return (fq + t) / (1.0 + fq * t);
}

double distortion_factor(const HolomorphicMap& map, const MetricDensity& source,
                         const MetricDensity& target, Complex z) {
  const Complex d = map.derivative(z);
  if (d == Complex{}) return 0.0;
  return std::exp(target.log_at(map.value(z)) + std::log(std::abs(d)) - source.log_at(z));
}

HarnackBoundSpec::HarnackBoundSpec(double r, double R, double ratio) : r_(r), R_(R), ratio_(ratio) {
  if (!(r > 0.0 && r < R)) throw Error(ErrorKind::BadParameter, "Harnack radii need 0 < r < R");
  if (!(ratio > 0.0 && ratio <= 1.0))
    throw Error(ErrorKind::BadParameter, "boundary ratio must lie in (0, 1]");
}

double HarnackBoundSpec::exponent(Complex z) const {
  const double m = std::abs(z);
  if (!(m > 0.0 && m <= r_)) throw Error(ErrorKind::OutsideDomain, "Harnack bound needs 0 < |z| <= r");
  return std::log(r_ / R_) / std::log(m / R_);
}

double boundary_max_ratio(const MetricDensity& metric, const MetricDensity& reference, double r) {
  auto value = [&](double theta) { return log_ratio(metric, reference, std::polar(r, theta)); };
  constexpr int kSweep = 720;
  const double step = 2.0 * kPi / kSweep;
  int best = 0;
  double best_value = kNegInf;
  for (int j = 0; j < kSweep; ++j) {
    const double v = value(-kPi + j * step);
    if (v > best_value) {
      best_value = v;
      best = j;
    }
  }
  double lo = -kPi + (best - 1) * step;
  double hi = -kPi + (best + 1) * step;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - g * (hi - lo), b = lo + g * (hi - lo);
  double fa = value(a), fb = value(b);
  while (hi - lo > 1e-10) {
    if (fa >= fb) {
      hi = b, b = a, fb = fa;
      a = hi - g * (hi - lo);
      fa = value(a);
    } else {
      lo = a, a = b, fa = fb;
      b = lo + g * (hi - lo);
      fb = value(b);
    }
  }
  return std::exp(std::max({best_value, fa, fb}));
}

double harnack_bound(const HarnackBoundSpec& spec, const MetricDensity& reference, Complex z) {
  const double c = spec.exponent(z);
  return std::exp(c * std::log(spec.boundary_max_ratio()) + reference.log_at(z));
}

double harnack_conical_bound(double alpha, double r, double ratio, Complex z) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::BadParameter, "conical Harnack needs 0 < r < 1");
  if (!(ratio > 0.0 && ratio <= 1.0)) throw Error(ErrorKind::BadParameter, "boundary ratio must lie in (0, 1]");
  const double m = std::abs(z);
  if (!(m > 0.0 && m <= r)) throw Error(ErrorKind::OutsideDomain, "conical Harnack needs 0 < |z| <= r");
  const double exponent = aux_v_alpha(alpha, z) / aux_v_alpha(alpha, Complex{r, 0.0});
  return std::exp(exponent * std::log(ratio) + conical_metric(alpha).log_at(z));
}

double hopf_functional(const MetricDensity& metric, const MetricDensity& reference, Complex z) {
  require_punctured(z);
  const double lr = log_ratio(metric, reference, z);
  if (lr == kNegInf) return kNegInf;
  return lr * -std::log(std::abs(z));
}

double hopf_conical_functional(const MetricDensity& metric, double alpha, Complex z) {
  require_punctured(z);
  const double lr = log_ratio(metric, conical_metric(alpha), z);
  if (lr == kNegInf) return kNegInf;
  return lr * std::pow(std::abs(z), 2.0 * (alpha - 1.0));
}

LimitEstimate log_scale_limit(const std::function<double(Complex)>& functional,
                              std::span<const double> moduli, double arg) {
  LimitEstimate est;
  std::vector<double> u, vals;
  for (double m : toward_zero(moduli)) {
    const double v = functional(std::polar(m, arg));
    est.moduli.push_back(m);
    est.values.push_back(v);
    if (std::isfinite(v)) {
      u.push_back(1.0 / -std::log(m));
      vals.push_back(v);
    }
  }
  if (vals.size() < 4) {
    est.behavior = LimitBehavior::Nonconvergent;
    est.limit = vals.empty() ? kNegInf : vals.back();
    return est;
  }
  est.limit = polynomial_limit(u, vals, 2);
  est.behavior = differences_shrinking(vals) ? LimitBehavior::Converged : LimitBehavior::Nonconvergent;
  return est;
}

LimitEstimate power_scale_limit(const std::function<double(Complex)>& functional,
                                std::span<const double> moduli, double arg) {
  LimitEstimate est;
  std::vector<double> vals;
  for (double m : toward_zero(moduli)) {
    const double v = functional(std::polar(m, arg));
    est.moduli.push_back(m);
    est.values.push_back(v);
    if (std::isfinite(v)) vals.push_back(v);
  }
  const std::size_t n = vals.size();
  if (n < 3) {
    est.limit = kNegInf;
    est.behavior = n < est.values.size() ? LimitBehavior::DivergesToMinusInfinity
                                         : LimitBehavior::Nonconvergent;
    return est;
  }
  const bool running_off = vals[n - 1] < 0.0 && vals[n - 1] < 1.5 * vals[n - 2] &&
                           vals[n - 2] < 1.5 * vals[n - 3];
  if (running_off) {
    est.limit = kNegInf;
    est.behavior = LimitBehavior::DivergesToMinusInfinity;
    return est;
  }
  est.limit = aitken(vals[n - 3], vals[n - 2], vals[n - 1]);
  est.behavior = differences_shrinking(vals) ? LimitBehavior::Converged : LimitBehavior::Nonconvergent;
  return est;
}

double aux_v(Complex z) {
  require_punctured(z);
  return 1.0 / -std::log(std::abs(z));
}

double aux_v_alpha(double alpha, Complex z) {
  require_punctured(z);
  if (!(alpha < 1.0)) throw Error(ErrorKind::BadParameter, "alpha must be < 1");
  const double p = std::pow(std::abs(z), 2.0 * (1.0 - alpha));
  return p / (1.0 - p);
}

double linearized_residual(const std::function<double(Complex)>& v, Complex z, double h) {
  const double lambda = punctured_disk_metric()(z);
  const double target = 8.0 * lambda * lambda * v(z);
  return std::abs(discrete_laplacian(v, z, h) - target) / std::abs(target);
}

VerificationReport radial_solution_space_check(double h) {
  if (!(h > 0.0)) throw Error(ErrorKind::BadParameter, "stencil size must be positive");
  VerificationReport report;
  report.suite = "aux-solutions";
  const auto radii = log_spaced(0.05, 0.95, 100);
  const double golden_angle = kPi * (3.0 - std::sqrt(5.0));

  // Residuals are scaled by (delta / h)^2 with delta = min(|z|, 1 - |z|), the
  // distance to the singular set of v; this is the natural size of the
  // five-point truncation error.
  auto sweep = [&](const std::function<double(Complex)>& v, bool worst) {
    double acc = worst ? 0.0 : std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < radii.size(); ++i) {
      const double res = linearized_residual(v, std::polar(radii[i], golden_angle * i), h);
      const double delta = std::min(radii[i], 1.0 - radii[i]);
      const double scaled = res * delta * delta / (h * h);
      acc = worst ? std::max(acc, scaled) : std::min(acc, res);
    }
    return acc;
  };
  auto log_inv = [](Complex z) { return -std::log(std::abs(z)); };
  report.add(check_at_most("scaled_residual[1/log(1/|z|)]",
                           sweep([&](Complex z) { return 1.0 / log_inv(z); }, true), kAuxResidualConstant,
                           0.0, Provenance::Published));
  report.add(check_at_most("scaled_residual[log(1/|z|)^2]",
                           sweep([&](Complex z) { return log_inv(z) * log_inv(z); }, true),
                           kAuxResidualConstant, 0.0, Provenance::Published));
  report.add(check_at_least("negative_control_residual[log(1/|z|)]", sweep(log_inv, false), 0.5, 0.0,
                            Provenance::Derived));
  return report;
}

}  // namespace hypmetric
