#include <cmath>
#include <numbers>

#include "hypmetric/geometry.hpp"
#include "hypmetric/metric.hpp"
#include "hypmetric/sampling.hpp"
#include "hypmetric/witness.hpp"
#include "support.hpp"

using namespace hypmetric;
using std::numbers::pi;

TEST_CASE("phi map") {
  const auto f = phi_map();
  CHECK(std::abs(f(1.0) - 1.0) == 0.0);
  CHECK(std::abs(f(0.0) - 1.0 / 12.0) <= 1e-16);
  CHECK(std::abs(f.derivative(1.0) - 1.0) == 0.0);
  // Self-map of the disk, checked on a boundary-dense grid.
  for (Complex z : polar_grid(0.5, 0.999999, 40, 90)) CHECK(std::abs(f(z)) < 1.0);
}

TEST_CASE("example1 map") {
  const auto f = example1_map();
  CHECK(std::abs(f(0.0)) == 0.0);
  CHECK(std::abs(f(0.5)) == doctest::Approx(0.5 * std::exp(-3.0)).epsilon(1e-15));
  CHECK(std::abs(f.derivative(0.0) - std::exp(-1.0)) <= 1e-16);
  for (Complex z : polar_grid(1e-6, 0.999, 30, 60)) {
    const double m = std::abs(f(z));
    CHECK(m > 0.0);
    CHECK(m < 1.0);
  }
}

TEST_CASE("derivatives match finite differences") {
  const HolomorphicMap maps[] = {phi_map(), example1_map()};
  const double h = 1e-6;
  for (const auto& f : maps) {
    for (Complex z : random_polar_points(13, 100, 0.05, 0.9)) {
      const Complex fd = (f(z + h) - f(z - h)) / (2 * h);
      const Complex exact = f.derivative(z);
      CHECK(std::abs(fd - exact) <= 1e-6 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST_CASE("phi expansion coefficient is -1/6") {
  const auto w = phi_expansion_check(approach_one(1, 5));
  CHECK(w.expected == doctest::Approx(-1.0 / 6.0));
  CHECK(w.trend_ok);
  CHECK(std::abs(w.extrapolated_limit + 1.0 / 6.0) <= 1e-8);
  // x = 0.99 and x = 0.9999 against the exact rational expression.
  const double xs[] = {0.99, 0.9999};
  const auto direct = phi_expansion_check(xs);
  CHECK(std::abs(direct.functional_values[0] + 1.0 / 6.0) <= 5e-3);
  CHECK(std::abs(direct.functional_values[1] + 1.0 / 6.0) <= 5e-5);
  // Cross-check against the pulled-back density evaluated directly.
  const auto pull = pullback(disk_metric(), phi_map(), DomainModel::disk());
  const double x = 0.99;
  CHECK(((1 - x * x) * pull(x) - 1) / ((1 - x) * (1 - x)) ==
        doctest::Approx(direct.functional_values[0]).epsilon(1e-9));
}

TEST_CASE("disk sharpness functional tends to -2/3") {
  const auto w = disk_sharpness_limit(approach_one(1, 5));
  CHECK(w.trend_ok);
  CHECK(std::abs(w.extrapolated_limit + 2.0 / 3.0) <= 1e-8);
  const double x = 1 - 1e-2;
  const double e4d = std::exp(4 * dist_disk(x, 0.0).value);
  const auto pull = pullback(disk_metric(), phi_map(), DomainModel::disk());
  CHECK((pull(x) / disk_metric()(x) - 1) * e4d == doctest::Approx(w.functional_values[1]).epsilon(1e-6));
}

TEST_CASE("example1 limit") {
  std::vector<Complex> zs;
  for (double k = 4; k <= 8.01; k += 0.5) zs.emplace_back(std::pow(10.0, -k), 0.0);
  const auto w = example1_limit(zs);
  CHECK(w.expected == -1.0);
  CHECK(w.trend_ok);
  CHECK(w.extrapolated_limit == doctest::Approx(-1.0).epsilon(2e-2));
  // Frozen raw values of the closed-form functional.
  const Complex raw[] = {1e-3, 1e-8, Complex(0, 1e-3)};
  const auto r = example1_limit(raw);
  CHECK(r.functional_values[0] == doctest::Approx(-0.88716).epsilon(1e-4));
  CHECK(r.functional_values[1] == doctest::Approx(-0.94851).epsilon(1e-4));
  CHECK(r.functional_values[2] == doctest::Approx(-0.87350).epsilon(1e-4));
  // Off-axis samples extrapolate to the same limit.
  std::vector<Complex> off;
  for (Complex z : zs) off.push_back(z * Complex(0, 1));
  CHECK(example1_limit(off).extrapolated_limit == doctest::Approx(-1.0).epsilon(2e-2));
  // Monotone along the real axis below 1e-3.
  std::vector<Complex> real;
  for (double m : log_spaced(1e-8, 1e-3, 30)) real.emplace_back(m, 0.0);
  const auto mono = example1_limit(real);
  for (std::size_t i = 1; i < mono.functional_values.size(); ++i)
    CHECK(mono.functional_values[i] > mono.functional_values[i - 1]);
  CHECK_ERROR_KIND(example1_limit(std::vector<Complex>{0.0}), ErrorKind::OutsideDomain);
}

TEST_CASE("annulus sharpness limit") {
  const double r = 0.5;
  CHECK(annulus_sharpness_constant(r) == doctest::Approx(-3.7570480758706367).epsilon(1e-14));
  const auto w = annulus_sharpness_limit(r, approach_one(2, 7));
  CHECK(w.trend_ok);
  CHECK(std::abs(w.extrapolated_limit - annulus_sharpness_constant(r)) <= 1e-6);
  // Frozen direct value at x = 1 - 1e-4.
  CHECK(w.functional_values[2] == doctest::Approx(-3.75703553).epsilon(1e-7));
  // Small r approaches the disk constant of the -1/3 part.
  CHECK(annulus_sharpness_constant(1e-40) == doctest::Approx(-1.0 / 3.0).epsilon(1e-3));
  // The reference point only shifts the calibration, not the limit.
  const auto other = annulus_sharpness_limit(r, approach_one(2, 7), 0.6);
  CHECK(other.extrapolated_limit == doctest::Approx(w.extrapolated_limit).epsilon(1e-6));
  CHECK_ERROR_KIND(annulus_sharpness_limit(r, std::vector<double>{0.3}), ErrorKind::OutsideDomain);
  CHECK_ERROR_KIND(annulus_sharpness_limit(1.5, approach_one(2, 3)), ErrorKind::BadParameter);
}

TEST_CASE("witness ratios stay below one") {
  for (const auto& w : {phi_expansion_check(approach_one(1, 6)), annulus_sharpness_limit(0.3, approach_one(1, 6))})
    for (double v : w.functional_values) CHECK(v < 0.0);
}
