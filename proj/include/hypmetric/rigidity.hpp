#pragma once

#include <functional>
#include <span>
#include <vector>

#include "hypmetric/metric.hpp"
#include "hypmetric/report.hpp"

namespace hypmetric {

/// Samples of lambda / lambda_ref along a sequence tending to a boundary point.
struct BoundarySequenceSample {
  std::vector<Complex> points;
  std::vector<double> ratios;
  std::vector<double> distances;  // d(z_n, q)
  Complex q{};
};

enum class Classification { RigidityForced, Inconclusive, StrictlyBelow };
std::string_view to_string(Classification c);

/// Abscissa of the decay fit: hyperbolic distance to q (general and puncture
/// settings) or log|z_n| (conical setting).
enum class FitAbscissa { Distance, LogModulus };

struct DecayEstimate {
  double beta = 0.0;
  double c = 0.0;
  double r2 = 0.0;
  Classification classification = Classification::Inconclusive;
  FitAbscissa abscissa = FitAbscissa::Distance;
  /// Points dropped because their ratio was exactly 1.
  std::size_t equal_points = 0;
  std::size_t used_points = 0;
};

class BoundarySetting {
 public:
  enum class Kind { General, Puncture, Conical };

  static BoundarySetting general() { return {Kind::General, 0.0}; }
  static BoundarySetting puncture() { return {Kind::Puncture, 0.0}; }
  static BoundarySetting conical(double alpha);

  Kind kind() const { return kind_; }
  double alpha() const { return alpha_; }
  /// 4, 2, or 2(1 - alpha).
  double threshold() const;
  FitAbscissa abscissa() const { return kind_ == Kind::Conical ? FitAbscissa::LogModulus : FitAbscissa::Distance; }

 private:
  BoundarySetting(Kind kind, double alpha) : kind_(kind), alpha_(alpha) {}
  Kind kind_;
  double alpha_;
};

inline constexpr double kClassifyMargin = 0.1;
inline constexpr double kClassifyMinR2 = 0.99;

/// Least-squares line through (x_n, log(1 - ratio_n)), x_n = d_n or log|z_n|.
/// For distances beta = -slope (1 - ratio ~ c e^{-beta d}); for log-moduli
/// beta = slope (1 - ratio ~ c |z|^beta). Throws DegenerateSample when every
/// ratio equals 1 and TooFewPoints below five usable points.
DecayEstimate decay_exponent_fit(const BoundarySequenceSample& sample,
                                 FitAbscissa abscissa = FitAbscissa::Distance);

Classification classify_boundary_condition(const DecayEstimate& estimate,
                                           const BoundarySetting& setting,
                                           double margin = kClassifyMargin);

/// Builds the sample for `metric` against `reference` and fits it in the
/// requested setting. A ratio equal to 1 (within 1e-12) triggers the interior
/// equality test on 10 extra points; if they are all equal too, the estimate
/// is RigidityForced without a fit.
DecayEstimate analyze_boundary_sequence(const MetricDensity& metric, const MetricDensity& reference,
                                        std::span<const Complex> points, Complex q,
                                        const std::function<double(Complex, Complex)>& distance,
                                        const BoundarySetting& setting);

BoundarySequenceSample make_boundary_sample(const MetricDensity& metric, const MetricDensity& reference,
                                            std::span<const Complex> points, Complex q,
                                            const std::function<double(Complex, Complex)>& distance);

/// (ratio - 1) log(1/|z|), puncture at 0.
double euclidean_puncture_form(double ratio, Complex z);

struct DichotomyReport {
  VerificationReport report;
  /// w(z_n) log(1/|z_n|) with w = log lambda - log lambda_{D'}.
  std::vector<double> scaled_values;
  double sup = 0.0;
  double limit = 0.0;
  /// Part (a): the scaled values stay bounded (and settle).
  bool bounded = false;
  /// Part (b): the scaled values tend to 0, which forces lambda = lambda_{D'}
  /// for metrics of curvature <= -4.
  bool triggered = false;
};

inline constexpr double kDichotomyTriggerTol = 1e-3;

/// Raises WrongSingularityOrder when w grows linearly in log(1/|z|), i.e. the
/// metric has a conical rather than a logarithmic singularity.
DichotomyReport dichotomy_report(const MetricDensity& metric, std::span<const Complex> sequence);

}  // namespace hypmetric
