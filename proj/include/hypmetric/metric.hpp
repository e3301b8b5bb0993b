#pragma once

#include <functional>
#include <string>

#include "hypmetric/domain.hpp"

namespace hypmetric {

/// Analytic map given by value and derivative evaluators.
struct HolomorphicMap {
  std::function<Complex(Complex)> value;
  std::function<Complex(Complex)> derivative;
  std::string label;

  Complex operator()(Complex z) const { return value(z); }
};

HolomorphicMap identity_map();
HolomorphicMap square_map();
/// Disk automorphism z -> (z - a) / (1 - conj(a) z), |a| < 1.
HolomorphicMap mobius_map(Complex a);

/// Conformal (pseudo)metric density lambda(z)|dz| on a region.
///
/// Builtins carry an exact log-density so that the curvature operator can
/// work with densities spanning many orders of magnitude near a puncture.
class MetricDensity {
 public:
  enum class Origin { ClosedForm, Pullback, User };
  using Fn = std::function<double(Complex)>;

  MetricDensity(Region region, Fn density, Fn log_density, std::string label, Origin origin);

  /// User density; the log-density falls back to log(density).
  static MetricDensity user(Region region, Fn density, std::string label);

  /// Checked evaluation: throws OutsideDomain / SingularPoint.
  double operator()(Complex z) const;
  /// Checked log-density; -inf where the density vanishes.
  double log_at(Complex z) const;

  const Region& region() const { return region_; }
  const std::string& label() const { return label_; }
  Origin origin() const { return origin_; }

 private:
  void check(Complex z) const;

  Region region_;
  Fn density_;
  Fn log_density_;
  std::string label_;
  Origin origin_;
};

double density_at(const MetricDensity& metric, Complex z);

// Closed-form densities, curvature -4 normalization.
MetricDensity disk_metric();
MetricDensity punctured_disk_metric();
/// 1 / (2|z| log(R/|z|)) on 0 < |z| < R.
MetricDensity punctured_disk_r_metric(double R);
MetricDensity annulus_metric(double r);
/// (1-alpha) |z|^-alpha / (1 - |z|^(2(1-alpha))) on the punctured disk.
MetricDensity conical_metric(double alpha);
/// (1-alpha) c |z|^-alpha / (1 - c^2 |z|^(2(1-alpha))), 0 < c <= 1.
MetricDensity conical_scaled_metric(double alpha, double c);
MetricDensity half_plane_metric();
MetricDensity strip_metric(double h);

/// Hyperbolic metric of a model domain.
MetricDensity hyperbolic_metric(const DomainModel& domain);

/// z -> lambda(f(z)) |f'(z)| on `source`. Points with f'(z) = 0 have density 0.
MetricDensity pullback(const MetricDensity& metric, const HolomorphicMap& map,
                       const DomainModel& source);

}  // namespace hypmetric
