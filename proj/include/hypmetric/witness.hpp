#pragma once

#include <span>
#include <string>
#include <vector>

#include "hypmetric/metric.hpp"
#include "hypmetric/report.hpp"

namespace hypmetric {

/// phi(z) = z - (z - 1)^3 / 12, an injective self-map of the disk fixing 1.
HolomorphicMap phi_map();

/// f(z) = z exp(-(1 + z) / (1 - z)), a self-map of the punctured disk.
HolomorphicMap example1_map();

struct WitnessLimit {
  std::string name;
  std::vector<Complex> sample_points;
  std::vector<double> functional_values;
  double extrapolated_limit = 0.0;
  double expected = 0.0;
  Provenance provenance = Provenance::Derived;
  /// Consecutive differences of the samples shrink.
  bool trend_ok = false;
};

/// ((1 - x^2) phi*lambda_D(x) - 1) / (1 - x)^2, evaluated from the exact
/// rational expression in e = 1 - x. Limit -1/6 as x -> 1.
WitnessLimit phi_expansion_check(std::span<const double> x_values);

/// (phi*lambda_D / lambda_D - 1)(x) e^{4 d_D(x, 0)}. Limit -2/3 as x -> 1.
WitnessLimit disk_sharpness_limit(std::span<const double> x_values);

/// (f*lambda_{D'} / lambda_{D'} - 1)(z) log(1/|z|) for the example1 map,
/// extrapolated in 1/log(1/|z|). Limit -1 as z -> 0.
WitnessLimit example1_limit(std::span<const Complex> z_values);

/// (phi*lambda_D / lambda_{A_r} - 1)(x) e^{4 d~(x)} on A_r = {r < |z| < 1},
/// where d~ is d_{A_r}(x, x0) shifted so that d~ = -1/2 log log(1/x) + o(1).
/// Limit -1/3 - pi^2 / (6 log(1/r)^2) as x -> 1.
WitnessLimit annulus_sharpness_limit(double r, std::span<const double> x_values, double x0 = -1.0);

double annulus_sharpness_constant(double r);

/// 1 - 10^{-k} for k = k0..k1.
std::vector<double> approach_one(int k0, int k1);

}  // namespace hypmetric
