#include <cmath>
#include <numbers>

#include "hypmetric/geometry.hpp"
#include "hypmetric/metric.hpp"
#include "hypmetric/sampling.hpp"
#include "hypmetric/witness.hpp"
#include "support.hpp"

using namespace hypmetric;
using std::numbers::pi;

TEST_CASE("closed-form distances against frozen values") {
  CHECK(dist_halfplane(Complex(0, 1), Complex(0, 2)).value == doctest::Approx(0.34657359027997265).epsilon(1e-14));
  CHECK(dist_halfplane(Complex(0, 1), Complex(1, 1)).value == doctest::Approx(0.48121182505960345).epsilon(1e-14));
  CHECK(dist_disk(Complex(0, 0.3), Complex(0, -0.3)).value == doctest::Approx(0.61903920840622341).epsilon(1e-14));
  CHECK(dist_disk(0.0, 0.5).value == doctest::Approx(std::atanh(0.5)).epsilon(1e-15));
  CHECK(dist_disk(0.2, 0.2).value == 0.0);
  CHECK(dist_disk(0.2, 0.3).method == DistanceMethod::ClosedForm);
}

TEST_CASE("lifted distances against frozen values") {
  const auto d1 = dist_punctured_disk(0.1, -0.1);
  CHECK(d1.value == doctest::Approx(0.63801351068923443).epsilon(1e-13));
  CHECK(d1.method == DistanceMethod::LiftMinimization);
  CHECK(dist_punctured_disk(0.01, 0.1).value == doctest::Approx(0.34657359027997265).epsilon(1e-13));
  CHECK(dist_annulus(0.8, 0.9, 0.5).value == doctest::Approx(0.41094447095598220).epsilon(1e-12));
  CHECK(hyperbolic_distance(DomainModel::punctured_disk_r(2.0), 0.2, -0.2).value ==
        doctest::Approx(dist_punctured_disk(0.1, -0.1).value).epsilon(1e-14));
}

TEST_CASE("strip distance is translation invariant and matches the half-plane") {
  const double h = 1.5;
  const Complex a(0.3, 0.4), b(-1.2, 1.1);
  const double d = dist_strip(a, b, h).value;
  CHECK(dist_strip(a + 7.0, b + 7.0, h).value == doctest::Approx(d).epsilon(1e-13));
  const Complex wa = std::exp(pi * a / h), wb = std::exp(pi * b / h);
  CHECK(dist_halfplane(wa, wb).value == doctest::Approx(d).epsilon(1e-12));
  // Far apart along the strip the distance grows like pi |dx| / (2h).
  const double far = dist_strip(Complex(0, h / 2), Complex(2000, h / 2), h).value;
  CHECK(far == doctest::Approx(pi * 2000 / (2 * h)).epsilon(1e-6));
}

TEST_CASE("deck winding bound") {
  const Complex z1 = std::polar(0.5, 3.0), z2 = std::polar(0.5, -3.0);
  CHECK_ERROR_KIND(dist_punctured_disk(z1, z2, 1), ErrorKind::WindingBoundTooSmall);
  const auto d = hyperbolic_distance(DomainModel::punctured_disk(), z1, z2, 1);
  CHECK(std::abs(d.deck_index) == 1);
  CHECK(d.value == doctest::Approx(dist_punctured_disk(z1, z2).value));
  CHECK_ERROR_KIND(dist_punctured_disk(z1, z2, 0), ErrorKind::BadParameter);
}

TEST_CASE("distance errors") {
  CHECK_ERROR_KIND(dist_disk(0.0, 1.0), ErrorKind::OutsideDomain);
  CHECK_ERROR_KIND(dist_punctured_disk(0.0, 0.5), ErrorKind::SingularPoint);
  CHECK_ERROR_KIND(dist_annulus(0.3, 0.8, 0.5), ErrorKind::OutsideDomain);
  CHECK_ERROR_KIND(geodesic_oracle(DomainModel::disk(), 0.1, 0.2, 50), ErrorKind::BadParameter);
}

TEST_CASE("metric axioms on random triples") {
  const DomainModel domains[] = {DomainModel::disk(), DomainModel::punctured_disk(), DomainModel::annulus(0.3),
                                 DomainModel::punctured_disk_r(2.0)};
  for (const auto& dom : domains) {
    CAPTURE(dom.name());
    const double lo = dom.kind() == DomainModel::Kind::Annulus ? 0.31 : 0.01;
    const auto a = random_polar_points(21, 200, lo, 0.99), b = random_polar_points(22, 200, lo, 0.99),
               c = random_polar_points(23, 200, lo, 0.99);
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double ab = hyperbolic_distance(dom, a[i], b[i]).value;
      CHECK(ab == doctest::Approx(hyperbolic_distance(dom, b[i], a[i]).value).epsilon(1e-9));
      const double bc = hyperbolic_distance(dom, b[i], c[i]).value;
      const double ac = hyperbolic_distance(dom, a[i], c[i]).value;
      CHECK(ac <= ab + bc + 1e-9);
    }
  }
}

TEST_CASE("holomorphic self-maps contract the disk distance") {
  const HolomorphicMap maps[] = {phi_map(), square_map(), mobius_map(Complex(0.5, 0.1))};
  const auto a = random_polar_points(31, 100, 0.0, 0.95), b = random_polar_points(32, 100, 0.0, 0.95);
  for (const auto& f : maps) {
    for (std::size_t i = 0; i < a.size(); ++i)
      CHECK(dist_disk(f(a[i]), f(b[i])).value <= dist_disk(a[i], b[i]).value + 1e-12);
  }
}

TEST_CASE("the inclusion D' -> D and A_r -> D' do not increase distance") {
  const auto a = random_polar_points(41, 100, 0.55, 0.95), b = random_polar_points(42, 100, 0.55, 0.95);
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double dd = dist_disk(a[i], b[i]).value;
    const double dp = dist_punctured_disk(a[i], b[i]).value;
    const double da = dist_annulus(a[i], b[i], 0.5).value;
    CHECK(dd <= dp + 1e-12);
    CHECK(dp <= da + 1e-12);
  }
}

TEST_CASE("grid oracle agrees with closed forms") {
  CHECK(geodesic_oracle(DomainModel::disk(), Complex(0, 0.3), Complex(0, -0.3), 200).value ==
        doctest::Approx(0.61903920840622341).epsilon(2e-2));
  const auto d = geodesic_oracle(DomainModel::punctured_disk(), 0.01, 0.1, 200);
  CHECK(d.method == DistanceMethod::GridOracle);
  CHECK(d.value == doctest::Approx(0.34657359027997265).epsilon(2e-2));
  CHECK(geodesic_oracle(DomainModel::half_plane(), Complex(0, 1), Complex(1, 1), 200).value ==
        doctest::Approx(0.48121182505960345).epsilon(2e-2));

  GeodesicGrid grid(DomainModel::annulus(0.5), 200, 4, {});
  CHECK(grid.distance(0.6, 0.6).value == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(grid.distance(0.8, 0.9).value == doctest::Approx(0.41094447095598220).epsilon(2e-2));
}

TEST_CASE("eight-neighbour oracle still converges on axis-aligned pairs") {
  CHECK(geodesic_oracle(DomainModel::half_plane(), Complex(0, 1), Complex(0, 2), 400, 1).value ==
        doctest::Approx(0.34657359027997265).epsilon(1e-2));
}

TEST_CASE("comparability constants") {
  const auto k = lemma44_constants(0.1);
  CHECK(k.c2 == doctest::Approx(std::log(10.0) + pi).epsilon(1e-15));
  CHECK(k.gamma == doctest::Approx(0.63801351068923443).epsilon(1e-10));
  CHECK(k.c1 == doctest::Approx(0.64275312165512103).epsilon(1e-9));
  CHECK(std::abs(std::arg(k.farthest)) == doctest::Approx(pi).epsilon(1e-6));
  // The farthest point is a maximum of the circle sweep.
  for (int j = 0; j < 64; ++j)
    CHECK(dist_punctured_disk(std::polar(0.1, 2 * pi * j / 64), 0.1).value <= k.gamma + 1e-12);
  CHECK_ERROR_KIND(lemma44_constants(0.0), ErrorKind::OutsideDomain);
  CHECK_ERROR_KIND(lemma44_constants(0.5, 0.4), ErrorKind::OutsideDomain);
}

TEST_CASE("covering decay ratio") {
  CHECK(covering_decay_ratio(0.0) == doctest::Approx(1.0));
  CHECK(covering_decay_ratio(0.9) == doctest::Approx(1.0 / 1.9).epsilon(1e-14));
  CHECK(covering_decay_ratio(0.999) == doctest::Approx(1.0 / 1.999).epsilon(1e-12));
  CHECK(covering_decay_ratio(0.99) > covering_decay_ratio(0.999));
  CHECK_ERROR_KIND(covering_decay_ratio(1.0), ErrorKind::OutsideDomain);
}
