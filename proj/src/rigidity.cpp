#include "hypmetric/rigidity.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hypmetric/extrapolate.hpp"
#include "hypmetric/sampling.hpp"

namespace hypmetric {

namespace {

constexpr double kEqualityTol = 1e-12;

}  // namespace

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::RigidityForced: return "RigidityForced";
    case Classification::Inconclusive: return "Inconclusive";
    case Classification::StrictlyBelow: return "StrictlyBelow";
  }
  return "?";
}

BoundarySetting BoundarySetting::conical(double alpha) {
  if (!(alpha < 1.0)) throw Error(ErrorKind::BadParameter, "conical order must be < 1");
  return {Kind::Conical, alpha};
}

double BoundarySetting::threshold() const {
  switch (kind_) {
    case Kind::General: return 4.0;
    case Kind::Puncture: return 2.0;
    case Kind::Conical: return 2.0 * (1.0 - alpha_);
  }
  return 0.0;
}

DecayEstimate decay_exponent_fit(const BoundarySequenceSample& sample, FitAbscissa abscissa) {
  const std::size_t n = sample.ratios.size();
  if (n < 5) throw Error(ErrorKind::TooFewPoints, "decay fit needs at least 5 points");
  const auto& source = abscissa == FitAbscissa::Distance ? sample.distances : std::vector<double>{};
  if (abscissa == FitAbscissa::Distance && source.size() != n)
    throw Error(ErrorKind::BadParameter, "distances and ratios differ in length");
  if (abscissa == FitAbscissa::LogModulus && sample.points.size() != n)
    throw Error(ErrorKind::BadParameter, "points and ratios differ in length");

  std::vector<std::pair<double, double>> rows;
  DecayEstimate est;
  est.abscissa = abscissa;
  for (std::size_t i = 0; i < n; ++i) {
    const double ratio = sample.ratios[i];
    if (!(ratio > 0.0) || ratio > 1.0 + kEqualityTol)
      throw Error(ErrorKind::BadParameter, "ratios must lie in (0, 1]");
    if (ratio >= 1.0) {
      ++est.equal_points;
      continue;
    }
    const double x = abscissa == FitAbscissa::Distance ? sample.distances[i]
                                                       : std::log(std::abs(sample.points[i]));
    rows.emplace_back(x, std::log1p(-ratio));
  }
  if (rows.empty()) throw Error(ErrorKind::DegenerateSample, "every ratio equals 1");
  if (rows.size() < 2) throw Error(ErrorKind::TooFewPoints, "fewer than two usable ratios");
  std::sort(rows.begin(), rows.end());

  std::vector<double> x, y;
  for (auto [a, b] : rows) {
    x.push_back(a);
    y.push_back(b);
  }
  const LineFit fit = fit_line(x, y);
  est.beta = abscissa == FitAbscissa::Distance ? -fit.slope : fit.slope;
  est.c = std::exp(fit.intercept);
  est.r2 = fit.r2;
  est.used_points = rows.size();
  est.classification = abscissa == FitAbscissa::Distance
                           ? classify_boundary_condition(est, BoundarySetting::general())
                           : Classification::Inconclusive;
  return est;
}

Classification classify_boundary_condition(const DecayEstimate& estimate,
                                           const BoundarySetting& setting, double margin) {
  const double threshold = setting.threshold();
  if (estimate.beta > threshold && estimate.r2 >= kClassifyMinR2) return Classification::RigidityForced;
  if (estimate.beta < threshold - margin) return Classification::StrictlyBelow;
  return Classification::Inconclusive;
}

BoundarySequenceSample make_boundary_sample(const MetricDensity& metric, const MetricDensity& reference,
                                            std::span<const Complex> points, Complex q,
                                            const std::function<double(Complex, Complex)>& distance) {
  BoundarySequenceSample sample;
  sample.q = q;
  for (Complex z : points) {
    sample.points.push_back(z);
    sample.ratios.push_back(std::exp(metric.log_at(z) - reference.log_at(z)));
    sample.distances.push_back(distance(z, q));
  }
  return sample;
}

DecayEstimate analyze_boundary_sequence(const MetricDensity& metric, const MetricDensity& reference,
                                        std::span<const Complex> points, Complex q,
                                        const std::function<double(Complex, Complex)>& distance,
                                        const BoundarySetting& setting) {
  const BoundarySequenceSample sample = make_boundary_sample(metric, reference, points, q, distance);
  const bool touches = std::any_of(sample.ratios.begin(), sample.ratios.end(),
                                   [](double r) { return std::abs(r - 1.0) <= kEqualityTol; });
  if (touches) {
    // Equality at an interior point forces equality everywhere; confirm on
    // extra points between the sample and the base point.
    std::size_t equal = 0;
    for (std::size_t i = 0; i < 10; ++i) {
      const double t = (i + 1) / 11.0;
      const Complex z = q + t * (points.front() - q);
      if (!metric.region().contains(z) || !reference.region().contains(z)) continue;
      if (std::abs(std::exp(metric.log_at(z) - reference.log_at(z)) - 1.0) <= kEqualityTol) ++equal;
      else break;
    }
    if (equal == 10) {
      DecayEstimate est;
      est.abscissa = setting.abscissa();
      est.classification = Classification::RigidityForced;
      est.equal_points = sample.ratios.size();
      est.r2 = 1.0;
      est.beta = std::numeric_limits<double>::infinity();
      return est;
    }
  }
  DecayEstimate est = decay_exponent_fit(sample, setting.abscissa());
  est.classification = classify_boundary_condition(est, setting);
  return est;
}

double euclidean_puncture_form(double ratio, Complex z) {
  const double m = std::abs(z);
  if (!(m > 0.0 && m < 1.0)) throw Error(ErrorKind::OutsideDomain, "need 0 < |z| < 1");
  return (ratio - 1.0) * -std::log(m);
}

DichotomyReport dichotomy_report(const MetricDensity& metric, std::span<const Complex> sequence) {
  if (sequence.size() < 4) throw Error(ErrorKind::TooFewPoints, "dichotomy needs at least 4 points");
  const MetricDensity hyperbolic = punctured_disk_metric();
  DichotomyReport out;
  out.report.suite = "dichotomy";
  std::vector<double> log_inv, w, u;
  for (Complex z : sequence) {
    const double li = -std::log(std::abs(z));
    const double wz = metric.log_at(z) - hyperbolic.log_at(z);
    log_inv.push_back(li);
    w.push_back(wz);
    u.push_back(1.0 / li);
    out.scaled_values.push_back(wz * li);
  }
  const LineFit growth = fit_line(log_inv, w);
  if (std::abs(growth.slope) > 0.05)
    throw Error(ErrorKind::WrongSingularityOrder,
                "log lambda - log lambda_{D'} grows like " + std::to_string(growth.slope) +
                    " log(1/|z|); singularity is not logarithmic");

  for (double v : out.scaled_values) out.sup = std::max(out.sup, std::abs(v));
  const bool all_zero = out.sup == 0.0;
  out.limit = all_zero ? 0.0 : polynomial_limit(u, out.scaled_values, 2);
  out.bounded = all_zero || differences_shrinking(out.scaled_values);
  out.triggered = std::abs(out.limit) <= kDichotomyTriggerTol;

  out.report.add({"part_a_bounded_sup", out.sup, std::abs(out.limit), 0.0, out.bounded,
                  Provenance::Published});
  out.report.add({"part_b_scaled_limit", out.limit, 0.0, kDichotomyTriggerTol, true, Provenance::Derived});
  out.report.notes.push_back(std::string("part (b) triggered: ") + (out.triggered ? "yes" : "no"));
  out.report.notes.push_back("assumption: curvature <= -4 (spot-checked, not certified)");
  return out;
}

}  // namespace hypmetric
