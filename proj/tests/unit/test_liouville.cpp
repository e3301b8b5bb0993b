#include <cmath>
#include <numbers>

#include "hypmetric/curvature.hpp"
#include "hypmetric/liouville.hpp"
#include "hypmetric/sampling.hpp"
#include "support.hpp"

using namespace hypmetric;

TEST_CASE("radial right-hand side") {
  CHECK(radial_rhs(-std::log(2.0), 0.0) == doctest::Approx(1.0));
  CHECK(radial_rhs(0.0, 3.0) == doctest::Approx(4.0));
  // w = -log(-2t): w'' = 1/t^2 = 4 e^{2w}.
  for (double t : {-0.5, -2.0, -10.0}) CHECK(radial_rhs(-std::log(-2 * t), t) == doctest::Approx(1.0 / (t * t)));
  CHECK_ERROR_KIND(radial_rhs(301.0, 0.0), ErrorKind::NumericOverflow);
  CHECK(first_integral(0.0, 2.0) == doctest::Approx(0.0));
}

TEST_CASE("RK4 reproduces the punctured disk profile") {
  const auto p = integrate_radial(-std::log(2.0), 1.0, -1.0, -5.0, 10000);
  CHECK(p.t.front() == doctest::Approx(-5.0));
  CHECK(p.t.back() == doctest::Approx(-1.0));
  for (std::size_t i = 1; i < p.size(); ++i) CHECK(p.t[i] > p.t[i - 1]);
  CHECK(std::abs(p.w.front() - -std::log(10.0)) <= 1e-8);
  CHECK(std::abs(p.w.front() - -2.3025850929940457) <= 1e-8);
  double drift = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) drift = std::max(drift, std::abs(p.energy(i) - p.energy(p.size() - 1)));
  CHECK(drift <= 1e-8);
  // lambda(t) = e^{w - t} is the density at |z| = e^t.
  CHECK(p.lambda(0) == doctest::Approx(1.0 / (2 * std::exp(-5.0) * 5.0)).epsilon(1e-8));
}

TEST_CASE("RK4 reproduces the conical profile") {
  const auto fam = RadialFamily::conical(0.5);
  const auto p = integrate_radial(fam.w(-1.0), fam.dw(-1.0), -1.0, -5.0, 10000);
  CHECK(fam.dw(-1.0) == doctest::Approx(1.0819767068693264).epsilon(1e-14));
  CHECK(std::abs(p.w.front() - fam.w(-5.0)) <= 1e-8);
  CHECK(std::abs(fam.w(-5.0) - -3.1863864311104568) <= 1e-12);
  CHECK(std::abs(p.energy(0) - p.energy(p.size() - 1)) <= 1e-8);
}

TEST_CASE("RK4 is fourth order") {
  auto err = [](int steps) {
    const auto p = integrate_radial(-std::log(2.0), 1.0, -1.0, -5.0, steps);
    return std::abs(p.w.front() + std::log(10.0));
  };
  CHECK(err(200) / err(400) >= 15.0);
}

TEST_CASE("integration errors and blow-up policy") {
  CHECK_ERROR_KIND(integrate_radial(0, 1, 0, 1, 5), ErrorKind::BadParameter);
  CHECK_ERROR_KIND(integrate_radial(0, 1, 1, 1, 100), ErrorKind::BadParameter);
  CHECK_ERROR_KIND(integrate_radial(0.0, 1.0, 0.0, 5.0, 1000), ErrorKind::NumericOverflow);
  const auto p = integrate_radial(0.0, 1.0, 0.0, 5.0, 1000, BlowUpPolicy::Truncate);
  CHECK(p.truncated);
  CHECK(p.t.back() < 5.0);
  for (double w : p.w) CHECK(std::isfinite(w));
}

TEST_CASE("closed-form families satisfy the ODE") {
  const RadialFamily fams[] = {RadialFamily::punctured_disk(), RadialFamily::punctured_disk_r(3.0),
                               RadialFamily::conical(0.3), RadialFamily::conical(-0.5),
                               RadialFamily::conical_scaled(0.5, 0.9)};
  for (const auto& f : fams) {
    CAPTURE(f.name());
    for (double t = -30.0; t < std::min(-0.05, f.t_max() - 0.05); t += 0.37) CHECK(f.residual(t) <= 1e-10);
  }
}

TEST_CASE("family identities") {
  for (double rho : {1e-6, 0.01, 0.3, 0.9}) {
    CHECK(RadialFamily::conical_scaled(0.4, 1.0).lambda(rho) ==
          doctest::Approx(RadialFamily::conical(0.4).lambda(rho)).epsilon(1e-14));
    CHECK(RadialFamily::punctured_disk_r(1.0).lambda(rho) ==
          doctest::Approx(RadialFamily::punctured_disk().lambda(rho)).epsilon(1e-14));
    CHECK(RadialFamily::punctured_disk().lambda(rho) == doctest::Approx(punctured_disk_metric()(rho)).epsilon(1e-14));
  }
  const auto s = RadialFamily::conical_scaled(0.5, 0.9), c = RadialFamily::conical(0.5);
  CHECK(s.lambda(1e-8) / c.lambda(1e-8) == doctest::Approx(0.9).epsilon(1e-6));
  CHECK_ERROR_KIND(RadialFamily::conical(1.0), ErrorKind::BadParameter);
  CHECK_ERROR_KIND(RadialFamily::conical_scaled(0.5, 0.0), ErrorKind::BadParameter);
  CHECK_ERROR_KIND(RadialFamily::punctured_disk_r(0.5), ErrorKind::BadParameter);
}

TEST_CASE("scaled conical family lies below the model and is monotone in c") {
  for (double c : {0.1, 0.5, 0.9}) {
    const auto f = RadialFamily::conical_scaled(0.5, c), m = RadialFamily::conical(0.5);
    for (double rho : log_spaced(1e-6, 0.999, 1000)) CHECK(f.lambda(rho) <= m.lambda(rho));
  }
  const double rho = 0.4;
  double prev = 0.0;
  for (double c = 0.1; c <= 1.0; c += 0.1) {
    const double v = RadialFamily::conical_scaled(0.5, c).lambda(rho);
    CHECK(v > prev);
    prev = v;
  }
}

TEST_CASE("family metrics have curvature -4") {
  const auto m = RadialFamily::conical_scaled(0.3, 0.5).metric();
  CHECK(curvature_at(m, Complex(0.3, 0.2)).value == doctest::Approx(-4.0).epsilon(1e-4));
}

TEST_CASE("singularity classification") {
  const auto log_kind = classify_singularity(RadialFamily::punctured_disk().sample(-20, -1, 4000));
  CHECK(log_kind.kind == SingularityProfile::Kind::Logarithmic);
  CHECK(classify_singularity(RadialFamily::punctured_disk_r(std::numbers::e).sample(-20, -1, 4000)).kind ==
        SingularityProfile::Kind::Logarithmic);
  for (double alpha : {-0.5, 0.3, 0.7}) {
    const auto s = classify_singularity(RadialFamily::conical(alpha).sample(-20, -0.1, 4000));
    CHECK(s.kind == SingularityProfile::Kind::Conical);
    CHECK(s.alpha == doctest::Approx(alpha).epsilon(1e-3));
  }
  const auto scaled = classify_singularity(RadialFamily::conical_scaled(0.3, 0.5).sample(-20, -0.1, 4000));
  CHECK(scaled.kind == SingularityProfile::Kind::Conical);
  CHECK(std::abs(scaled.alpha - 0.3) <= 1e-3);
  CHECK(to_string(SingularityProfile::Kind::Logarithmic) == "Logarithmic");
}

TEST_CASE("classification is stable under refinement and truncation") {
  const auto fam = RadialFamily::conical(0.3);
  const auto a = classify_singularity(fam.sample(-20, -1, 2000));
  const auto b = classify_singularity(fam.sample(-20, -1, 8000));
  const auto c = classify_singularity(fam.sample(-25, -1, 4000));
  CHECK(a.kind == b.kind);
  CHECK(a.kind == c.kind);
  CHECK(a.alpha == doctest::Approx(b.alpha).epsilon(1e-3));
  CHECK(a.alpha == doctest::Approx(c.alpha).epsilon(1e-3));
  const auto pd = RadialFamily::punctured_disk();
  CHECK(classify_singularity(pd.sample(-16, -1, 1000)).kind == classify_singularity(pd.sample(-40, -1, 9000)).kind);
}

TEST_CASE("classification needs a long enough grid") {
  CHECK_ERROR_KIND(classify_singularity(RadialFamily::punctured_disk().sample(-10, -1, 400)), ErrorKind::GridTooShort);
  CHECK_ERROR_KIND(classify_singularity(RadialFamily::punctured_disk().sample(-20, -1, 20)), ErrorKind::GridTooShort);
  // A profile that is neither form.
  RadialProfile p;
  for (int i = 0; i < 400; ++i) {
    const double t = -20.0 + 0.05 * i;
    p.t.push_back(t);
    p.w.push_back(std::sin(t));
    p.dw.push_back(std::cos(t));
  }
  CHECK(classify_singularity(p).kind == SingularityProfile::Kind::Unclassified);
}

TEST_CASE("dichotomy part (a)") {
  const auto e = dichotomy_verify_part_a(std::numbers::e);
  CHECK(e.pass());
  const auto e2 = dichotomy_verify_part_a(std::exp(2.0));
  CHECK(e2.pass());
  const auto one = dichotomy_verify_part_a(1.0);
  CHECK(one.pass());
  for (const auto& c : one.checks) CHECK(std::abs(c.value) <= 1e-12 + std::abs(c.expected));
  CHECK_ERROR_KIND(dichotomy_verify_part_a(0.5), ErrorKind::BadParameter);
}
