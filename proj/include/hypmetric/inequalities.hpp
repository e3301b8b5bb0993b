#pragma once

#include <span>
#include <vector>

#include "hypmetric/metric.hpp"
#include "hypmetric/report.hpp"

namespace hypmetric {

// ---- Ahlfors-Schwarz -------------------------------------------------------

/// Largest lambda / lambda_ref over the sample set.
double max_ratio(const MetricDensity& metric, const MetricDensity& reference,
                 std::span<const Complex> points);

/// One check on max(lambda / lambda_ref) - 1. The tolerance is 1e-12 when both
/// densities are closed forms and 1e-9 otherwise.
VerificationReport ahlfors_check(const MetricDensity& metric, const MetricDensity& reference,
                                 std::span<const Complex> points);

// ---- Beardon-Minda ---------------------------------------------------------

/// (f_q + tanh 2d) / (1 + f_q tanh 2d), requires 0 <= f_q <= 1 and d >= 0.
double beardon_minda_bound(double distortion_at_q, double d);

/// Hyperbolic distortion lambda_target(f(z)) |f'(z)| / lambda_source(z).
double distortion_factor(const HolomorphicMap& map, const MetricDensity& source,
                         const MetricDensity& target, Complex z);

// ---- Harnack ---------------------------------------------------------------

class HarnackBoundSpec {
 public:
  /// 0 < r < 1, r < R, 0 < boundary_max_ratio <= 1.
  HarnackBoundSpec(double r, double R, double boundary_max_ratio);

  double r() const { return r_; }
  double R() const { return R_; }
  double boundary_max_ratio() const { return ratio_; }

  /// log(r/R) / log(|z|/R).
  double exponent(Complex z) const;

 private:
  double r_, R_, ratio_;
};

/// max over |xi| = r of lambda / lambda_ref: 720-point sweep plus golden
/// section refinement; ties resolve to the smallest argument.
double boundary_max_ratio(const MetricDensity& metric, const MetricDensity& reference, double r);

/// boundary_max_ratio^C(z) * lambda_ref(z) on 0 < |z| < r.
double harnack_bound(const HarnackBoundSpec& spec, const MetricDensity& reference, Complex z);

/// boundary_max_ratio^(v_alpha(z)/v_alpha(r)) * lambda_alpha(z) on 0 < |z| < r < 1.
double harnack_conical_bound(double alpha, double r, double boundary_max_ratio, Complex z);

// ---- Hopf functionals ------------------------------------------------------

/// log(lambda / lambda_ref)(z) * log(1/|z|); -inf when lambda underflows.
double hopf_functional(const MetricDensity& metric, const MetricDensity& reference, Complex z);

/// log(lambda / lambda_alpha)(z) * |z|^(2(alpha-1)).
double hopf_conical_functional(const MetricDensity& metric, double alpha, Complex z);

enum class LimitBehavior { Converged, DivergesToMinusInfinity, Nonconvergent };
std::string_view to_string(LimitBehavior b);

struct LimitEstimate {
  std::vector<double> moduli;
  std::vector<double> values;
  double limit = 0.0;
  LimitBehavior behavior = LimitBehavior::Nonconvergent;
};

/// Samples along |z| = moduli (argument `arg`) and estimates the limit as
/// |z| -> 0 by a quadratic fit in u = 1/log(1/|z|). Samples are taken in
/// decreasing modulus, so values.back() is the deepest. -inf samples are dropped.
LimitEstimate log_scale_limit(const std::function<double(Complex)>& functional,
                              std::span<const double> moduli, double arg = 0.0);

/// Same, for functionals whose error decays like a power of |z|: Aitken on
/// the last three finite samples, or DivergesToMinusInfinity when the samples
/// run off to -inf.
LimitEstimate power_scale_limit(const std::function<double(Complex)>& functional,
                                std::span<const double> moduli, double arg = 0.0);

// ---- auxiliary radial solutions --------------------------------------------

/// 1 / log(1/|z|).
double aux_v(Complex z);
/// |z|^(2(1-alpha)) / (1 - |z|^(2(1-alpha))).
double aux_v_alpha(double alpha, Complex z);

/// Relative residual |Lap_h v - 8 lambda_{D'}^2 v| / |8 lambda_{D'}^2 v| at z.
double linearized_residual(const std::function<double(Complex)>& v, Complex z, double h);

inline constexpr double kAuxResidualConstant = 10.0;

/// Both 1/log(1/|z|) and log(1/|z|)^2 solve Lap v = 8 lambda_{D'}^2 v at 100
/// log-spaced radii in [0.05, 0.95]: relative residual <= 10 (h/delta)^2 with
/// delta = min(|z|, 1 - |z|).
/// log(1/|z|) is a negative control whose residual stays near 1.
VerificationReport radial_solution_space_check(double h);

}  // namespace hypmetric
