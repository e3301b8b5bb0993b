#pragma once

#include <cmath>
#include <string>
#include <vector>

#include "hypmetric/metric.hpp"
#include "hypmetric/report.hpp"

namespace hypmetric {

// Radial constant-curvature -4 metrics in log-radius form: with t = log|z| and
// w(t) = log(|z| lambda), the curvature equation becomes the autonomous ODE
// w'' = 4 exp(2w) with first integral E = w'^2 - 4 exp(2w).

inline constexpr double kOverflowGuard = 300.0;

/// 4 exp(2w); throws NumericOverflow for w > 300.
double radial_rhs(double w, double t);

double first_integral(double w, double dw);

struct RadialProfile {
  enum class Source { ClosedForm, Integrated };

  std::vector<double> t;  // strictly increasing
  std::vector<double> w;
  std::vector<double> dw;
  Source source = Source::Integrated;
  std::string description;
  /// Integration stopped early at a blow-up.
  bool truncated = false;

  std::size_t size() const { return t.size(); }
  double lambda(std::size_t i) const;
  double energy(std::size_t i) const { return first_integral(w[i], dw[i]); }
};

enum class BlowUpPolicy { Throw, Truncate };

/// Fixed-step classical RK4 from t0 to t1 (either direction).
RadialProfile integrate_radial(double w0, double dw0, double t0, double t1, int steps,
                               BlowUpPolicy policy = BlowUpPolicy::Throw);

/// Closed-form radial solutions.
class RadialFamily {
 public:
  static RadialFamily punctured_disk();
  /// 1 / (2 rho log(R/rho)), R >= 1.
  static RadialFamily punctured_disk_r(double R);
  static RadialFamily conical(double alpha);
  /// (1-alpha) c rho^-alpha / (1 - c^2 rho^(2(1-alpha))), 0 < c <= 1.
  static RadialFamily conical_scaled(double alpha, double c);

  double w(double t) const;
  double dw(double t) const;
  double d2w(double t) const;
  double lambda(double rho) const { return std::exp(w(std::log(rho)) - std::log(rho)); }
  /// |w'' - 4 e^{2w}| / max(1, 4 e^{2w}).
  double residual(double t) const;
  /// Largest t where the closed form is defined.
  double t_max() const;

  RadialProfile sample(double t0, double t1, std::size_t n) const;
  MetricDensity metric() const;
  const std::string& name() const { return name_; }

 private:
  enum class Kind { Logarithmic, Conical };
  RadialFamily(Kind kind, double a, double b, std::string name)
      : kind_(kind), a_(a), b_(b), name_(std::move(name)) {}

  Kind kind_;
  double a_;  // log R, or alpha
  double b_;  // unused, or c
  std::string name_;
};

struct SingularityProfile {
  enum class Kind { Logarithmic, Conical, Unclassified };
  Kind kind = Kind::Unclassified;
  double alpha = 0.0;  // conical order when kind == Conical
  /// sup of the bounded remainder over the tested window.
  double remainder_bound = 0.0;
};
std::string_view to_string(SingularityProfile::Kind kind);

/// Classifies the singularity at t -> -inf from the quarter of the grid
/// nearest to it. Requires the profile to reach t <= -15.
SingularityProfile classify_singularity(const RadialProfile& profile);

/// |log lambda^(R) - log lambda_{D'}| log(1/|z|) at |z| = 1e-2 .. 1e-10 is
/// bounded by log R + 0.01, with limit log R.
VerificationReport dichotomy_verify_part_a(double R);

}  // namespace hypmetric
