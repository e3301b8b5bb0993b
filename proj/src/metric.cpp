#include "hypmetric/metric.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace hypmetric {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kLn2 = std::numbers::ln2;

std::string fmt_param(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

void require_conical(double alpha) {
  if (!(alpha < 1.0) || !std::isfinite(alpha))
    throw Error(ErrorKind::BadParameter, "conical order must satisfy alpha < 1");
}

}  // namespace

HolomorphicMap identity_map() {
  return {[](Complex z) { return z; }, [](Complex) { return Complex{1.0, 0.0}; }, "identity"};
}

HolomorphicMap square_map() {
  return {[](Complex z) { return z * z; }, [](Complex z) { return 2.0 * z; }, "square"};
}

HolomorphicMap mobius_map(Complex a) {
  if (!(std::abs(a) < 1.0)) throw Error(ErrorKind::BadParameter, "mobius parameter needs |a| < 1");
  const Complex ac = std::conj(a);
  const double scale = 1.0 - std::norm(a);
  return {[a, ac](Complex z) { return (z - a) / (1.0 - ac * z); },
          [ac, scale](Complex z) {
            const Complex d = 1.0 - ac * z;
            return scale / (d * d);
          },
          "mobius:" + fmt_param(a.real()) + "," + fmt_param(a.imag())};
}

MetricDensity::MetricDensity(Region region, Fn density, Fn log_density, std::string label,
                             Origin origin)
    : region_(std::move(region)),
      density_(std::move(density)),
      log_density_(std::move(log_density)),
      label_(std::move(label)),
      origin_(origin) {
  if (!log_density_) {
    log_density_ = [d = density_](Complex z) {
      const double v = d(z);
      return v > 0.0 ? std::log(v) : -std::numeric_limits<double>::infinity();
    };
  }
}

MetricDensity MetricDensity::user(Region region, Fn density, std::string label) {
  return {std::move(region), std::move(density), nullptr, std::move(label), Origin::User};
}

void MetricDensity::check(Complex z) const {
  if (region_.is_singular(z))
    throw Error(ErrorKind::SingularPoint, label_ + " is singular at the evaluation point");
  if (!region_.contains(z))
    throw Error(ErrorKind::OutsideDomain, "point outside " + region_.name + " for " + label_);
}

double MetricDensity::operator()(Complex z) const {
  check(z);
  return density_(z);
}

double MetricDensity::log_at(Complex z) const {
  check(z);
  return log_density_(z);
}

double density_at(const MetricDensity& metric, Complex z) { return metric(z); }

MetricDensity disk_metric() {
  return {Region::from(DomainModel::disk()),
          [](Complex z) {
            const double m = std::abs(z);
            return 1.0 / ((1.0 - m) * (1.0 + m));
          },
          [](Complex z) {
            const double m = std::abs(z);
            return -std::log1p(-m) - std::log1p(m);
          },
          "disk", MetricDensity::Origin::ClosedForm};
}

MetricDensity punctured_disk_metric() {
  return {Region::from(DomainModel::punctured_disk()),
          [](Complex z) {
            const double m = std::abs(z);
            return 1.0 / (2.0 * m * -std::log(m));
          },
          [](Complex z) {
            const double lm = std::log(std::abs(z));
            return -kLn2 - lm - std::log(-lm);
          },
          "pdisk", MetricDensity::Origin::ClosedForm};
}

MetricDensity punctured_disk_r_metric(double R) {
  const auto domain = DomainModel::punctured_disk_r(R);
  const double logR = std::log(R);
  return {Region::from(domain),
          [logR](Complex z) {
            const double m = std::abs(z);
            return 1.0 / (2.0 * m * (logR - std::log(m)));
          },
          [logR](Complex z) {
            const double lm = std::log(std::abs(z));
            return -kLn2 - lm - std::log(logR - lm);
          },
          "pdiskR:" + fmt_param(R), MetricDensity::Origin::ClosedForm};
}

MetricDensity annulus_metric(double r) {
  const auto domain = DomainModel::annulus(r);
  const double L = -std::log(r);
  return {Region::from(domain),
          [L](Complex z) {
            const double m = std::abs(z);
            return kPi / (2.0 * m * L * std::sin(kPi * -std::log(m) / L));
          },
          [L](Complex z) {
            const double lm = std::log(std::abs(z));
            return std::log(kPi / (2.0 * L)) - lm - std::log(std::sin(kPi * -lm / L));
          },
          "annulus:" + fmt_param(r), MetricDensity::Origin::ClosedForm};
}

MetricDensity conical_scaled_metric(double alpha, double c) {
  require_conical(alpha);
  if (!(c > 0.0 && c <= 1.0)) throw Error(ErrorKind::BadParameter, "scale c must lie in (0, 1]");
  const double beta = 1.0 - alpha;
  const double logc = std::log(c);
  auto log_density = [alpha, beta, logc](Complex z) {
    const double lm = std::log(std::abs(z));
    return std::log(beta) + logc - alpha * lm - std::log(-std::expm1(2.0 * (logc + beta * lm)));
  };
  std::string label = c == 1.0 ? "conical:" + fmt_param(alpha)
                               : "conical-scaled:" + fmt_param(alpha) + "," + fmt_param(c);
  return {Region::from(DomainModel::punctured_disk()),
          [log_density](Complex z) { return std::exp(log_density(z)); }, log_density,
          std::move(label), MetricDensity::Origin::ClosedForm};
}

MetricDensity conical_metric(double alpha) { return conical_scaled_metric(alpha, 1.0); }

MetricDensity half_plane_metric() {
  return {Region::from(DomainModel::half_plane()),
          [](Complex z) { return 0.5 / z.imag(); },
          [](Complex z) { return -kLn2 - std::log(z.imag()); },
          "halfplane", MetricDensity::Origin::ClosedForm};
}

MetricDensity strip_metric(double h) {
  const auto domain = DomainModel::strip(h);
  return {Region::from(domain),
          [h](Complex z) { return kPi / (2.0 * h * std::sin(kPi * z.imag() / h)); },
          [h](Complex z) { return std::log(kPi / (2.0 * h)) - std::log(std::sin(kPi * z.imag() / h)); },
          "strip:" + fmt_param(h), MetricDensity::Origin::ClosedForm};
}

MetricDensity hyperbolic_metric(const DomainModel& domain) {
  switch (domain.kind()) {
    case DomainModel::Kind::Disk: return disk_metric();
    case DomainModel::Kind::PuncturedDisk: return punctured_disk_metric();
    case DomainModel::Kind::PuncturedDiskR: return punctured_disk_r_metric(domain.parameter());
    case DomainModel::Kind::Annulus: return annulus_metric(domain.parameter());
    case DomainModel::Kind::HalfPlane: return half_plane_metric();
    case DomainModel::Kind::Strip: return strip_metric(domain.parameter());
  }
  throw Error(ErrorKind::BadParameter, "unknown domain kind");
}

MetricDensity pullback(const MetricDensity& metric, const HolomorphicMap& map,
                       const DomainModel& source) {
  auto density = [metric, map](Complex z) {
    const Complex d = map.derivative(z);
    if (d == Complex{}) return 0.0;
    return metric(map.value(z)) * std::abs(d);
  };
  auto log_density = [metric, map](Complex z) {
    const Complex d = map.derivative(z);
    if (d == Complex{}) return -std::numeric_limits<double>::infinity();
    return metric.log_at(map.value(z)) + std::log(std::abs(d));
  };
  return {Region::from(source), std::move(density), std::move(log_density),
          "pull:" + map.label + ":" + metric.label(), MetricDensity::Origin::Pullback};
}

}  // namespace hypmetric
