#include "hypmetric/suites.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hypmetric/curvature.hpp"
#include "hypmetric/geometry.hpp"
#include "hypmetric/inequalities.hpp"
#include "hypmetric/liouville.hpp"
#include "hypmetric/parse.hpp"
#include "hypmetric/rigidity.hpp"
#include "hypmetric/sampling.hpp"

namespace hypmetric {

namespace {

using std::numbers::pi;

const double kE = std::numbers::e;
const double kGoldenAngle = pi * (3.0 - std::sqrt(5.0));

std::string bracket(std::string_view name, std::string_view what) {
  return std::string(name) + "[" + std::string(what) + "]";
}

std::vector<Complex> powers_of_ten(double k0, double k1, double step) {
  std::vector<Complex> out;
  for (double k = k0; k <= k1 + 1e-9; k += step) out.emplace_back(std::pow(10.0, -k), 0.0);
  return out;
}

std::vector<double> moduli_of(const std::vector<Complex>& zs) {
  std::vector<double> out;
  for (Complex z : zs) out.push_back(std::abs(z));
  return out;
}

double rms(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return std::sqrt(s / v.size());
}

VerificationReport witness_report(const WitnessLimit& w, double tol) {
  VerificationReport report;
  report.add(check_near(bracket("extrapolated_limit", w.name), w.extrapolated_limit, w.expected, tol,
                        w.provenance));
  report.add({bracket("trend_shrinking", w.name), w.trend_ok ? 1.0 : 0.0, 1.0, 0.0, w.trend_ok,
              Provenance::Exact});
  double worst = -std::numeric_limits<double>::infinity();
  for (double v : w.functional_values) worst = std::max(worst, v);
  report.add(check_at_most(bracket("ratio_below_one", w.name), worst, 0.0, 0.0, Provenance::Published));
  if (!w.functional_values.empty()) {
    std::string raw = "raw values:";
    for (double v : w.functional_values) raw += " " + std::to_string(v);
    report.notes.push_back(raw);
  }
  return report;
}

}  // namespace

double SuiteConfig::tol(const std::string& name, double fallback) const {
  const auto it = tolerances.find(name);
  return it == tolerances.end() ? fallback : it->second;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "ahlfors",  "beardon-minda", "harnack",  "harnack-conical", "hopf",
      "hopf-conical", "aux-solutions", "example1", "phi",         "disk-sharpness",
      "annulus-sharpness:<r>", "curvature", "lemma44", "decay-ratio", "dichotomy"};
  return names;
}

bool is_witness_suite(std::string_view name) {
  return name == "example1" || name == "phi" || name == "disk-sharpness" ||
         name.starts_with("annulus-sharpness:");
}

bool is_known_suite(std::string_view name) {
  if (name.starts_with("annulus-sharpness:")) return true;
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

// ---- curvature ---------------------------------------------------------------

VerificationReport curvature_suite(const SuiteConfig& config) {
  // Sample annuli keep the stencil well away from the domain edge and from
  // critical points of the pullback maps (phi' vanishes at -1, example1's
  // derivative at 2 - sqrt 3), where the O(h^2) constant blows up.
  struct Case {
    const char* spec;
    double rmin, rmax;
  };
  const Case cases[] = {
      {"disk", 0.0, 0.7},
      {"pdisk", 0.3, 0.7},
      {"annulus:0.5", 0.65, 0.8},
      {"conical:0.5", 0.3, 0.7},
      {"pdiskR:2.718281828459045", 0.4, 0.9},
      {"pull:phi:disk", 0.0, 0.5},
      {"pull:example1:pdisk", 0.6, 0.85},
      {"pull:mobius:0.3,0.2:disk", 0.0, 0.7},
  };
  const double h = config.tol("h", kDefaultStencil);
  const double kappa_tol = config.tol("kappa", 1e-4);
  const double lo = config.tol("ratio_lo", 50.0);
  const double hi = config.tol("ratio_hi", 200.0);

  VerificationReport report;
  report.suite = "curvature";
  report.seed = config.seed;
  std::uint64_t index = 0;
  for (const Case& c : cases) {
    const MetricDensity metric = parse_metric(c.spec);
    const auto points = random_polar_points(config.seed + index++, 100, c.rmin, c.rmax);
    std::vector<double> fine, coarse;
    for (Complex z : points) {
      fine.push_back(curvature_at(metric, z, h).value + 4.0);
      coarse.push_back(curvature_at(metric, z, 10.0 * h).value + 4.0);
    }
    double worst = 0.0;
    for (double e : fine) worst = std::max(worst, std::abs(e));
    report.add(check_at_most(bracket("kappa_max_error", c.spec), worst, 0.0, kappa_tol, Provenance::Exact));
    const double ratio = rms(coarse) / rms(fine);
    report.add({bracket("second_order_ratio", c.spec), ratio, 0.5 * (lo + hi), 0.5 * (hi - lo),
                ratio >= lo && ratio <= hi, Provenance::Derived});
  }
  return report;
}

// ---- Ahlfors -----------------------------------------------------------------

VerificationReport ahlfors_suite(const SuiteConfig& config) {
  struct Pair {
    const char* metric;
    const char* reference;
    int grid;  // 0 disk, 1 punctured, 2 annulus
    bool isometry;
  };
  const Pair pairs[] = {
      {"pull:phi:disk", "disk", 0, false},
      {"pull:square:disk", "disk", 0, false},
      {"pull:mobius:0.3,0.2:disk", "disk", 0, true},
      {"disk", "disk", 0, true},
      {"pull:example1:pdisk", "pdisk", 1, false},
      {"pull:square:pdisk", "pdisk", 1, true},
      {"conical-scaled:0.5,0.9", "conical:0.5", 1, false},
      {"pdiskR:2.718281828459045", "pdisk", 1, false},
      {"disk", "pdisk", 1, false},
      {"pdisk", "annulus:0.5", 2, false},
  };
  const std::size_t n = config.grid;
  const std::vector<Complex> grids[] = {disk_grid(n, 1.0), polar_grid(1e-3, 0.99, n, n),
                                        polar_grid(0.51, 0.99, n, n)};
  const Complex centers[] = {0.0, 0.5, std::sqrt(0.5)};
  const double strict = config.tol("strict", 1e-6);

  VerificationReport report;
  report.suite = "ahlfors";
  report.seed = config.seed;
  for (const Pair& p : pairs) {
    const MetricDensity metric = parse_metric(p.metric);
    const MetricDensity reference = parse_metric(p.reference);
    const auto& grid = grids[p.grid];
    VerificationReport part = ahlfors_check(metric, reference, grid);
    if (config.tolerances.contains("ahlfors")) {
      for (Check& c : part.checks) {
        c.tol = config.tol("ahlfors", c.tol);
        c.pass = c.value <= c.expected + c.tol;
      }
    }
    report.append(part);
    if (!p.isometry) {
      const Complex z = centers[p.grid];
      const double ratio = metric(z) / reference(z);
      report.add(check_at_most(bracket("center_ratio", std::string(p.metric) + " vs " + p.reference), ratio,
                               1.0 - strict, 0.0, Provenance::Published));
    }
  }
  return report;
}

// ---- Beardon-Minda -----------------------------------------------------------

VerificationReport beardon_minda_suite(const SuiteConfig& config) {
  struct Case {
    const char* map;
    const char* metric;
    double rmin, rmax;
  };
  const Case cases[] = {
      {"phi", "disk", 0.0, 0.95},
      {"square", "disk", 0.0, 0.95},
      {"example1", "pdisk", 0.05, 0.9},
  };
  const double slack = config.tol("slack", 1e-10);
  VerificationReport report;
  report.suite = "beardon-minda";
  report.seed = config.seed;
  std::uint64_t index = 0;
  for (const Case& c : cases) {
    const HolomorphicMap map = parse_map(c.map);
    const MetricDensity metric = parse_metric(c.metric);
    const DomainModel domain = *metric.region().model;
    const auto zs = random_polar_points(config.seed + 2 * index, 100, c.rmin, c.rmax);
    const auto qs = random_polar_points(config.seed + 2 * index + 1, 100, c.rmin, c.rmax);
    ++index;
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < zs.size(); ++i) {
      const double fz = distortion_factor(map, metric, metric, zs[i]);
      const double fq = std::min(1.0, distortion_factor(map, metric, metric, qs[i]));
      const double d = hyperbolic_distance(domain, zs[i], qs[i]).value;
      worst = std::min(worst, beardon_minda_bound(fq, d) - fz);
    }
    report.add(check_at_least(bracket("min_slack", std::string(c.map) + " on " + c.metric), worst, 0.0, slack,
                              Provenance::Published));
  }
  return report;
}

// ---- Harnack -----------------------------------------------------------------

VerificationReport harnack_suite(const SuiteConfig& config) {
  const double tol = config.tol("slack", 1e-12);
  const MetricDensity metric = parse_metric("pull:example1:pdisk");
  const MetricDensity reference = punctured_disk_metric();
  const double r = 0.1;
  const HarnackBoundSpec spec(r, 1.0, boundary_max_ratio(metric, reference, r));
  double worst = 0.0;
  for (Complex z : polar_grid(1e-6, r * (1.0 - 1e-9), 25, 20))
    worst = std::max(worst, metric(z) / harnack_bound(spec, reference, z));
  VerificationReport report;
  report.suite = "harnack";
  report.seed = config.seed;
  report.add(check_at_most("max_lambda_over_bound[pull:example1:pdisk,r=0.1,R=1]", worst, 1.0, tol,
                           Provenance::Published));
  report.notes.push_back("boundary max ratio: " + std::to_string(spec.boundary_max_ratio()));
  report.notes.push_back("assumption: curvature <= -4 (closed-form pullback)");
  return report;
}

VerificationReport harnack_conical_suite(const SuiteConfig& config) {
  const double tol = config.tol("slack", 1e-12);
  const double alpha = 0.5, r = 0.5;
  const MetricDensity metric = conical_scaled_metric(alpha, 0.9);
  const double ratio = boundary_max_ratio(metric, conical_metric(alpha), r);
  double worst = 0.0;
  for (Complex z : polar_grid(1e-4, r * (1.0 - 1e-9), 15, 20))
    worst = std::max(worst, metric(z) / harnack_conical_bound(alpha, r, ratio, z));
  VerificationReport report;
  report.suite = "harnack-conical";
  report.seed = config.seed;
  report.add(check_at_most("max_lambda_over_bound[conical-scaled:0.5,0.9,r=0.5]", worst, 1.0, tol,
                           Provenance::Derived));
  report.notes.push_back("boundary max ratio: " + std::to_string(ratio));
  return report;
}

// ---- Hopf --------------------------------------------------------------------

VerificationReport hopf_suite(const SuiteConfig& config) {
  const double tol = config.tol("limit", 2e-2);
  const MetricDensity reference = punctured_disk_metric();
  VerificationReport report;
  report.suite = "hopf";
  report.seed = config.seed;

  const auto decades = moduli_of(powers_of_ten(2, 8, 1));
  for (double R : {kE, kE * kE}) {
    const MetricDensity metric = punctured_disk_r_metric(R);
    const auto est =
        log_scale_limit([&](Complex z) { return hopf_functional(metric, reference, z); }, decades);
    const std::string name = "pdiskR:" + std::to_string(R);
    report.add(check_near(bracket("extrapolated_limit", name), est.limit, -std::log(R), tol,
                          Provenance::Derived));
    report.notes.push_back(name + " raw value at |z|=1e-8: " + std::to_string(est.values.back()));

    // limsup is no larger than the best circle estimate.
    double best = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 9; ++i) {
      const double rr = 0.1 * i;
      best = std::min(best, std::log(boundary_max_ratio(metric, reference, rr)) * -std::log(rr));
    }
    report.add(check_at_most(bracket("limsup_vs_circle_bound", name), est.limit, best, 5e-2,
                             Provenance::Published));
  }

  const MetricDensity pulled = parse_metric("pull:example1:pdisk");
  const auto half_decades = moduli_of(powers_of_ten(4, 8, 0.5));
  const auto est =
      log_scale_limit([&](Complex z) { return hopf_functional(pulled, reference, z); }, half_decades);
  report.add(check_near("extrapolated_limit[pull:example1:pdisk]", est.limit, -1.0, tol, Provenance::Published));
  report.notes.push_back("pull:example1:pdisk raw value at |z|=1e-8: " + std::to_string(est.values.back()));

  double self = 0.0;
  for (double m : decades) self = std::max(self, std::abs(hopf_functional(reference, reference, m)));
  report.add(check_at_most("self_functional[pdisk]", self, 0.0, 0.0, Provenance::Exact));
  return report;
}

VerificationReport hopf_conical_suite(const SuiteConfig& config) {
  const double alpha = 0.5;
  const auto moduli = moduli_of(powers_of_ten(1, 6, 1));
  VerificationReport report;
  report.suite = "hopf-conical";
  report.seed = config.seed;

  auto diverging = [&](const MetricDensity& metric, const std::string& name) {
    const auto est =
        power_scale_limit([&](Complex z) { return hopf_conical_functional(metric, alpha, z); }, moduli);
    const bool diverges = est.behavior == LimitBehavior::DivergesToMinusInfinity;
    report.add({bracket("diverges_to_minus_infinity", name), diverges ? 1.0 : 0.0, 1.0, 0.0, diverges,
                Provenance::Derived});
    double tail = -std::numeric_limits<double>::infinity();
    for (std::size_t i = est.values.size() >= 3 ? est.values.size() - 3 : 0; i < est.values.size(); ++i)
      tail = std::max(tail, est.values[i]);
    report.add(check_at_most(bracket("limsup_negative", name), tail, 0.0, 0.0, Provenance::Published));
    report.notes.push_back(name + ": " + std::string(to_string(est.behavior)));
  };
  diverging(conical_scaled_metric(alpha, 0.9), "conical-scaled:0.5,0.9");
  diverging(conical_metric(0.4), "conical:0.4");

  const MetricDensity self = conical_metric(alpha);
  double worst = 0.0;
  for (double m : moduli) worst = std::max(worst, std::abs(hopf_conical_functional(self, alpha, m)));
  report.add(check_at_most("self_functional[conical:0.5]", worst, 0.0, 0.0, Provenance::Exact));
  return report;
}

VerificationReport aux_solutions_suite(const SuiteConfig& config) {
  VerificationReport report = radial_solution_space_check(config.tol("h", 1e-3));
  report.seed = config.seed;
  report.add(check_near("aux_v[e^-2]", aux_v(std::exp(-2.0)), 0.5, 1e-15, Provenance::Exact));
  report.add(check_near("aux_v_alpha[0,1/sqrt2]", aux_v_alpha(0.0, std::sqrt(0.5)), 1.0, 1e-12, Provenance::Exact));
  return report;
}

// ---- geometry ----------------------------------------------------------------

VerificationReport lemma44_suite(const SuiteConfig& config) {
  const Complex q = 0.1;
  const Lemma44Constants k = lemma44_constants(q);
  double lo = std::numeric_limits<double>::infinity(), hi = 0.0;
  const auto radii = log_spaced(1e-8, 0.1, 50);
  for (std::size_t i = 0; i < radii.size(); ++i) {
    const Complex z = std::polar(radii[i], kGoldenAngle * i);
    const double v = -std::log(radii[i]) * std::exp(-2.0 * dist_punctured_disk(z, q).value);
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  VerificationReport report;
  report.suite = "lemma44";
  report.seed = config.seed;
  const double tol = config.tol("sandwich", 1e-12);
  report.add(check_near("c2", k.c2, std::log(10.0) + pi, 1e-12, Provenance::Published));
  report.add(check_at_least("min_scaled_decay_vs_c1", lo, k.c1, tol, Provenance::Published));
  report.add(check_at_most("max_scaled_decay_vs_c2", hi, k.c2, tol, Provenance::Published));
  report.notes.push_back("gamma: " + std::to_string(k.gamma) + ", c1: " + std::to_string(k.c1));
  return report;
}

VerificationReport decay_ratio_suite(const SuiteConfig& config) {
  const double a = covering_decay_ratio(0.9), b = covering_decay_ratio(0.99), c = covering_decay_ratio(0.999);
  VerificationReport report;
  report.suite = "decay-ratio";
  report.seed = config.seed;
  report.add(check_near("ratio[0.999]", c, 1.0 / 1.999, config.tol("exact", 1e-12), Provenance::Derived));
  const bool monotone = a > b && b > c;
  report.add({"monotone_toward_half", monotone ? 1.0 : 0.0, 1.0, 0.0, monotone, Provenance::Exact});
  report.add(check_near("limit_half[0.999]", c, 0.5, config.tol("limit", 5e-4), Provenance::Published));
  return report;
}

// ---- dichotomy ---------------------------------------------------------------

VerificationReport dichotomy_suite(const SuiteConfig& config) {
  VerificationReport report;
  report.suite = "dichotomy";
  report.seed = config.seed;
  report.append(dichotomy_verify_part_a(kE));
  report.append(dichotomy_verify_part_a(kE * kE));

  const auto sequence = powers_of_ten(2, 10, 1);
  const char* family[] = {"pdisk", "pdiskR:2.718281828459045", "pdiskR:7.38905609893065", "pdiskR:1.5",
                          "pull:example1:pdisk", "conical:0.5", "conical-scaled:0.5,0.9"};
  for (const char* spec : family) {
    bool triggered = false;
    try {
      triggered = dichotomy_report(parse_metric(spec), sequence).triggered;
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::WrongSingularityOrder) throw;
    }
    const bool expected = std::string_view(spec) == "pdisk";
    report.add({bracket("part_b_trigger", spec), triggered ? 1.0 : 0.0, expected ? 1.0 : 0.0, 0.0,
                triggered == expected, Provenance::Published});
  }
  report.notes.push_back("assumption: curvature <= -4 (closed-form family)");
  return report;
}

// ---- dispatch ----------------------------------------------------------------

WitnessRun run_witness(const SuiteConfig& config) {
  const std::string_view name = config.suite;
  WitnessRun run;
  double tol = 0.0;
  if (name == "phi") {
    run.limit = phi_expansion_check(approach_one(1, 5));
    tol = config.tol("limit", 1e-4);
  } else if (name == "disk-sharpness") {
    run.limit = disk_sharpness_limit(approach_one(1, 5));
    tol = config.tol("limit", 1e-3);
  } else if (name == "example1") {
    std::vector<Complex> zs = powers_of_ten(4, 8, 0.5);
    run.limit = example1_limit(zs);
    tol = config.tol("limit", 2e-2);
  } else if (name.starts_with("annulus-sharpness:")) {
    const double r = parse_real(name.substr(std::string_view("annulus-sharpness:").size()));
    if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::ParseError, "annulus-sharpness needs 0 < r < 1");
    std::vector<double> xs;
    for (double x : approach_one(1, 6))
      if (x > std::sqrt(r)) xs.push_back(x);
    run.limit = annulus_sharpness_limit(r, xs);
    tol = config.tol("limit", 1e-2);
  } else {
    throw Error(ErrorKind::UnknownSuite, "not a witness suite: " + config.suite);
  }
  run.report = witness_report(run.limit, tol);
  run.report.suite = config.suite;
  run.report.seed = config.seed;
  return run;
}

VerificationReport run_suite(const SuiteConfig& config) {
  const std::string_view s = config.suite;
  if (is_witness_suite(s)) return run_witness(config).report;
  if (s == "curvature") return curvature_suite(config);
  if (s == "ahlfors") return ahlfors_suite(config);
  if (s == "beardon-minda") return beardon_minda_suite(config);
  if (s == "harnack") return harnack_suite(config);
  if (s == "harnack-conical") return harnack_conical_suite(config);
  if (s == "hopf") return hopf_suite(config);
  if (s == "hopf-conical") return hopf_conical_suite(config);
  if (s == "aux-solutions") return aux_solutions_suite(config);
  if (s == "lemma44") return lemma44_suite(config);
  if (s == "decay-ratio") return decay_ratio_suite(config);
  if (s == "dichotomy") return dichotomy_suite(config);
  throw Error(ErrorKind::UnknownSuite, "unknown suite: " + config.suite);
}

}  // namespace hypmetric
