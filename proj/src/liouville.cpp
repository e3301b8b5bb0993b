#include "hypmetric/liouville.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hypmetric/extrapolate.hpp"

namespace hypmetric {

namespace {

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

double total_variation(const std::vector<double>& v) {
  double tv = 0.0;
  for (std::size_t i = 1; i < v.size(); ++i) tv += std::abs(v[i] - v[i - 1]);
  return tv;
}

constexpr double kClassifyVariation = 1e-3;

}  // namespace

double radial_rhs(double w, double /*t*/) {
  if (!(w <= kOverflowGuard)) throw Error(ErrorKind::NumericOverflow, "radial solution blew up");
  return 4.0 * std::exp(2.0 * w);
}

double first_integral(double w, double dw) { return dw * dw - 4.0 * std::exp(2.0 * w); }

double RadialProfile::lambda(std::size_t i) const { return std::exp(w[i] - t[i]); }

RadialProfile integrate_radial(double w0, double dw0, double t0, double t1, int steps,
                               BlowUpPolicy policy) {
  if (steps < 10) throw Error(ErrorKind::BadParameter, "integration needs at least 10 steps");
  if (t0 == t1) throw Error(ErrorKind::BadParameter, "integration interval is empty");

  RadialProfile out;
  out.source = RadialProfile::Source::Integrated;
  out.description = "rk4 steps=" + std::to_string(steps);
  out.t.reserve(steps + 1);
  out.w.reserve(steps + 1);
  out.dw.reserve(steps + 1);

  const double h = (t1 - t0) / steps;
  double w = w0, p = dw0;
  out.t.push_back(t0);
  out.w.push_back(w);
  out.dw.push_back(p);
  for (int i = 0; i < steps; ++i) {
    const double t = t0 + i * h;
    try {
      const double k1w = p, k1p = radial_rhs(w, t);
      const double k2w = p + 0.5 * h * k1p, k2p = radial_rhs(w + 0.5 * h * k1w, t + 0.5 * h);
      const double k3w = p + 0.5 * h * k2p, k3p = radial_rhs(w + 0.5 * h * k2w, t + 0.5 * h);
      const double k4w = p + h * k3p, k4p = radial_rhs(w + h * k3w, t + h);
      const double nw = w + h / 6.0 * (k1w + 2.0 * k2w + 2.0 * k3w + k4w);
      const double np = p + h / 6.0 * (k1p + 2.0 * k2p + 2.0 * k3p + k4p);
      if (!(nw <= kOverflowGuard) || !std::isfinite(np))
        throw Error(ErrorKind::NumericOverflow, "radial solution blew up");
      w = nw;
      p = np;
    } catch (const Error&) {
      if (policy == BlowUpPolicy::Throw) throw;
      out.truncated = true;
      break;
    }
    out.t.push_back(i + 1 == steps ? t1 : t0 + (i + 1) * h);
    out.w.push_back(w);
    out.dw.push_back(p);
  }
  if (h < 0.0) {
    std::reverse(out.t.begin(), out.t.end());
    std::reverse(out.w.begin(), out.w.end());
    std::reverse(out.dw.begin(), out.dw.end());
  }
  return out;
}

RadialFamily RadialFamily::punctured_disk() { return {Kind::Logarithmic, 0.0, 0.0, "pdisk"}; }

RadialFamily RadialFamily::punctured_disk_r(double R) {
  if (!(R >= 1.0) || !std::isfinite(R)) throw Error(ErrorKind::BadParameter, "need R >= 1");
  if (R == 1.0) return punctured_disk();
  return {Kind::Logarithmic, std::log(R), 0.0, "pdiskR:" + fmt(R)};
}

RadialFamily RadialFamily::conical(double alpha) { return conical_scaled(alpha, 1.0); }

RadialFamily RadialFamily::conical_scaled(double alpha, double c) {
  if (!(alpha < 1.0) || !std::isfinite(alpha)) throw Error(ErrorKind::BadParameter, "need alpha < 1");
  if (!(c > 0.0 && c <= 1.0)) throw Error(ErrorKind::BadParameter, "need 0 < c <= 1");
  std::string name = c == 1.0 ? "conical:" + fmt(alpha) : "conical-scaled:" + fmt(alpha) + "," + fmt(c);
  return {Kind::Conical, alpha, c, std::move(name)};
}

double RadialFamily::t_max() const {
  if (kind_ == Kind::Logarithmic) return a_;
  return -std::log(b_) / (1.0 - a_);
}

double RadialFamily::w(double t) const {
  if (kind_ == Kind::Logarithmic) return -std::log(2.0 * (a_ - t));
  const double beta = 1.0 - a_;
  const double logc = std::log(b_);
  return std::log(beta) + logc + beta * t - std::log(-std::expm1(2.0 * (logc + beta * t)));
}

double RadialFamily::dw(double t) const {
  if (kind_ == Kind::Logarithmic) return 1.0 / (a_ - t);
  const double beta = 1.0 - a_;
  const double x = b_ * b_ * std::exp(2.0 * beta * t);
  return beta * (1.0 + x) / (1.0 - x);
}

double RadialFamily::d2w(double t) const {
  if (kind_ == Kind::Logarithmic) return 1.0 / ((a_ - t) * (a_ - t));
  const double beta = 1.0 - a_;
  const double x = b_ * b_ * std::exp(2.0 * beta * t);
  const double one_minus = -std::expm1(2.0 * (std::log(b_) + beta * t));
  return 4.0 * beta * beta * x / (one_minus * one_minus);
}

double RadialFamily::residual(double t) const {
  const double rhs = 4.0 * std::exp(2.0 * w(t));
  return std::abs(d2w(t) - rhs) / std::max(1.0, rhs);
}

RadialProfile RadialFamily::sample(double t0, double t1, std::size_t n) const {
  if (n < 2 || !(t0 < t1) || !(t1 < t_max()))
    throw Error(ErrorKind::BadParameter, "sample needs t0 < t1 < t_max and n >= 2");
  RadialProfile out;
  out.source = RadialProfile::Source::ClosedForm;
  out.description = name_;
  for (std::size_t i = 0; i < n; ++i) {
    const double t = i + 1 == n ? t1 : t0 + (t1 - t0) * static_cast<double>(i) / (n - 1);
    out.t.push_back(t);
    out.w.push_back(w(t));
    out.dw.push_back(dw(t));
  }
  return out;
}

MetricDensity RadialFamily::metric() const {
  if (kind_ == Kind::Logarithmic)
    return a_ == 0.0 ? punctured_disk_metric() : punctured_disk_r_metric(std::exp(a_));
  return conical_scaled_metric(a_, b_);
}

std::string_view to_string(SingularityProfile::Kind kind) {
  switch (kind) {
    case SingularityProfile::Kind::Logarithmic: return "Logarithmic";
    case SingularityProfile::Kind::Conical: return "Conical";
    case SingularityProfile::Kind::Unclassified: return "Unclassified";
  }
  return "?";
}

SingularityProfile classify_singularity(const RadialProfile& profile) {
  if (profile.t.empty() || profile.t.front() > -15.0)
    throw Error(ErrorKind::GridTooShort, "profile must reach t <= -15");
  const std::size_t tail = profile.size() / 4;
  if (tail < 8) throw Error(ErrorKind::GridTooShort, "profile tail has fewer than 8 points");

  std::vector<double> t(profile.t.begin(), profile.t.begin() + tail);
  std::vector<double> w(profile.w.begin(), profile.w.begin() + tail);
  if (t.back() >= 0.0) throw Error(ErrorKind::GridTooShort, "tail must lie in t < 0");

  auto sup_abs = [](const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::abs(x));
    return m;
  };

  // Logarithmic: w + log(-2t) is bounded; either flat on the window or of the
  // form a + b/t (an O(1/log(1/|z|)) approach to its limit).
  std::vector<double> rem(tail), inv_t(tail);
  for (std::size_t i = 0; i < tail; ++i) {
    rem[i] = w[i] + std::log(-2.0 * t[i]);
    inv_t[i] = 1.0 / t[i];
  }
  if (total_variation(rem) <= kClassifyVariation)
    return {SingularityProfile::Kind::Logarithmic, 1.0, sup_abs(rem)};
  {
    const LineFit fit = fit_line(inv_t, rem);
    std::vector<double> resid(tail);
    for (std::size_t i = 0; i < tail; ++i) resid[i] = rem[i] - (fit.intercept + fit.slope * inv_t[i]);
    if (total_variation(resid) <= kClassifyVariation)
      return {SingularityProfile::Kind::Logarithmic, 1.0, sup_abs(rem)};
  }

  // Conical: w - (1 - alpha) t is bounded, alpha from the fitted slope.
  const LineFit fit = fit_line(t, w);
  if (fit.slope > 0.0) {
    std::vector<double> cone(tail);
    for (std::size_t i = 0; i < tail; ++i) cone[i] = w[i] - fit.slope * t[i];
    if (total_variation(cone) <= kClassifyVariation)
      return {SingularityProfile::Kind::Conical, 1.0 - fit.slope, sup_abs(cone)};
  }
  return {SingularityProfile::Kind::Unclassified, 0.0, std::numeric_limits<double>::infinity()};
}

VerificationReport dichotomy_verify_part_a(double R) {
  if (!(R >= 1.0)) throw Error(ErrorKind::BadParameter, "need R >= 1");
  VerificationReport report;
  report.suite = "dichotomy";
  const MetricDensity metric = punctured_disk_r_metric(R);
  const MetricDensity hyperbolic = punctured_disk_metric();
  std::vector<double> u, values;
  double sup = 0.0;
  for (int k = 2; k <= 10; ++k) {
    const Complex z{std::pow(10.0, -k), 0.0};
    const double log_inv = -std::log(std::abs(z));
    const double v = std::abs(metric.log_at(z) - hyperbolic.log_at(z)) * log_inv;
    sup = std::max(sup, v);
    u.push_back(1.0 / log_inv);
    values.push_back(v);
  }
  const double logR = std::log(R);
  report.add(check_at_most("sup_scaled_log_ratio[R=" + fmt(R) + "]", sup, logR + 0.01, 0.0,
                           Provenance::Derived));
  report.add(check_near("limit_scaled_log_ratio[R=" + fmt(R) + "]", polynomial_limit(u, values, 2),
                        logR, 2e-2, Provenance::Derived));
  return report;
}

}  // namespace hypmetric
