#include <cmath>

#include "hypmetric/parse.hpp"
#include "hypmetric/suites.hpp"
#include "support.hpp"

using namespace hypmetric;

TEST_CASE("domain and metric specs") {
  CHECK(parse_domain("disk") == DomainModel::disk());
  CHECK(parse_domain("annulus:0.25") == DomainModel::annulus(0.25));
  CHECK(parse_domain("strip:2") == DomainModel::strip(2.0));
  CHECK(parse_domain("pdiskR:3") == DomainModel::punctured_disk_r(3.0));
  CHECK(parse_metric("conical:0.5")(0.25) == doctest::Approx(4.0 / 3.0));
  CHECK(parse_metric("conical-scaled:0.5,0.9")(0.25) == doctest::Approx(conical_scaled_metric(0.5, 0.9)(0.25)));
  CHECK(parse_metric("halfplane")(Complex(0, 2)) == doctest::Approx(0.25));
  const auto pulled = parse_metric("pull:mobius:0.3,-0.2:disk");
  CHECK(pulled(0.4) == doctest::Approx(disk_metric()(0.4)).epsilon(1e-12));
  CHECK(parse_metric("pull:phi:disk").label() == "pull:phi:disk");
  const auto nested = parse_metric("pull:square:pull:phi:disk");
  CHECK(nested(0.3) > 0.0);
}

TEST_CASE("numbers and points") {
  CHECK(parse_complex("0.5,-1") == Complex(0.5, -1.0));
  CHECK(parse_complex("2") == Complex(2.0, 0.0));
  CHECK(parse_real(" 1e-3 ") == doctest::Approx(1e-3));
  CHECK_ERROR_KIND(parse_real("abc"), ErrorKind::ParseError);
  CHECK_ERROR_KIND(parse_complex("1,2,3"), ErrorKind::ParseError);
}

TEST_CASE("spec errors") {
  CHECK_ERROR_KIND(parse_domain("torus"), ErrorKind::ParseError);
  CHECK_ERROR_KIND(parse_domain("annulus:2"), ErrorKind::ParseError);
  CHECK_ERROR_KIND(parse_metric("pull:phi"), ErrorKind::ParseError);
  CHECK_ERROR_KIND(parse_map("mobius:1,0"), ErrorKind::ParseError);
  CHECK_ERROR_KIND(parse_setting("sideways"), ErrorKind::ParseError);
  CHECK_ERROR_KIND(parse_family("annulus:0.5"), ErrorKind::ParseError);
  CHECK(parse_setting("conical:0.25").threshold() == doctest::Approx(1.5));
  CHECK(parse_family("pdiskR:2").name().size() > 0);
}

TEST_CASE("suite registry") {
  CHECK(is_known_suite("ahlfors"));
  CHECK(is_known_suite("annulus-sharpness:0.3"));
  CHECK_FALSE(is_known_suite("unknown-suite"));
  CHECK(is_witness_suite("phi"));
  CHECK_FALSE(is_witness_suite("hopf"));
  SuiteConfig c;
  c.suite = "unknown-suite";
  CHECK_ERROR_KIND(run_suite(c), ErrorKind::UnknownSuite);
  c.suite = "annulus-sharpness:2";
  CHECK_ERROR_KIND(run_suite(c), ErrorKind::ParseError);
}

TEST_CASE("every suite passes with default tolerances") {
  for (const std::string& name : suite_names()) {
    SuiteConfig c;
    c.suite = name == "annulus-sharpness:<r>" ? "annulus-sharpness:0.5" : name;
    const auto report = run_suite(c);
    CAPTURE(c.suite);
    for (const auto& check : report.checks) {
      CAPTURE(check.name);
      CHECK(check.pass);
    }
    CHECK(report.seed == 42);
  }
}

TEST_CASE("tolerance overrides") {
  SuiteConfig c;
  c.suite = "phi";
  c.tolerances["limit"] = 1e-12;
  CHECK_FALSE(run_suite(c).pass());
  c.suite = "curvature";
  c.tolerances = {{"kappa", 1e-9}};
  CHECK_FALSE(run_suite(c).pass());
}

TEST_CASE("reports are deterministic per seed") {
  SuiteConfig a, b;
  a.suite = b.suite = "beardon-minda";
  b.seed = 7;
  const auto r1 = run_suite(a), r2 = run_suite(a), r3 = run_suite(b);
  for (std::size_t i = 0; i < r1.checks.size(); ++i) CHECK(r1.checks[i].value == r2.checks[i].value);
  CHECK(r3.seed == 7);
  CHECK(r1.checks[0].value != r3.checks[0].value);
}
