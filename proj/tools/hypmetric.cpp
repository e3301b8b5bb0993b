// hypmetric: command-line front end for the conformal metric toolkit.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "hypmetric/curvature.hpp"
#include "hypmetric/geometry.hpp"
#include "hypmetric/liouville.hpp"
#include "hypmetric/parse.hpp"
#include "hypmetric/rigidity.hpp"
#include "hypmetric/sampling.hpp"
#include "hypmetric/suites.hpp"

using namespace hypmetric;
using Json = nlohmann::ordered_json;

namespace {

struct Globals {
  std::string output;
  std::uint64_t seed = 42;
  std::vector<std::string> tolerances;
};

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

bool want_json(const Globals& g, bool json_default = false) {
  if (g.output.empty()) return json_default;
  return g.output == "json";
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

Json report_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const Check& c : r.checks)
    checks.push_back({{"name", c.name},
                      {"value", c.value},
                      {"expected", c.expected},
                      {"tol", c.tol},
                      {"pass", c.pass},
                      {"provenance", to_string(c.provenance)}});
  return {{"suite", r.suite}, {"seed", r.seed}, {"checks", checks}, {"notes", r.notes}, {"pass", r.pass()}};
}

void print_report_csv(const VerificationReport& r) {
  std::cout << "name,value,expected,tol,pass,provenance\n";
  for (const Check& c : r.checks)
    std::cout << '"' << c.name << "\"," << num(c.value) << ',' << num(c.expected) << ',' << num(c.tol) << ','
              << (c.pass ? "true" : "false") << ',' << to_string(c.provenance) << "\n";
  for (const std::string& n : r.notes) std::cout << "# " << n << "\n";
  std::cout << "# suite=" << r.suite << " seed=" << r.seed << " pass=" << (r.pass() ? "true" : "false") << "\n";
}

Json witness_json(const WitnessLimit& w, bool pass) {
  Json points = Json::array();
  for (Complex z : w.sample_points) points.push_back({z.real(), z.imag()});
  return {{"name", w.name},
          {"sample_points", points},
          {"functional_values", w.functional_values},
          {"extrapolated_limit", w.extrapolated_limit},
          {"expected", w.expected},
          {"provenance", to_string(w.provenance)},
          {"trend_ok", w.trend_ok},
          {"pass", pass}};
}

std::map<std::string, double> parse_tolerances(const std::vector<std::string>& items) {
  std::map<std::string, double> out;
  for (const std::string& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::ParseError, "--tol expects name=value: " + item);
    out[item.substr(0, eq)] = parse_real(std::string_view(item).substr(eq + 1));
  }
  return out;
}

std::vector<Complex> parse_grid(const std::string& text) {
  std::string_view s = text;
  auto numbers = [](std::string_view rest) {
    std::vector<double> v;
    std::size_t start = 0;
    while (true) {
      const auto comma = rest.find(',', start);
      v.push_back(parse_real(rest.substr(start, comma == rest.npos ? rest.npos : comma - start)));
      if (comma == rest.npos) break;
      start = comma + 1;
    }
    return v;
  };
  if (s.starts_with("polar:")) {
    const auto v = numbers(s.substr(6));
    if (v.size() != 4 || v[2] < 1 || v[3] < 1) throw Error(ErrorKind::ParseError, "polar:<rmin>,<rmax>,<nr>,<ntheta>");
    return polar_grid(v[0], v[1], static_cast<std::size_t>(v[2]), static_cast<std::size_t>(v[3]));
  }
  if (s.starts_with("cartesian:")) {
    const auto v = numbers(s.substr(10));
    if (v.size() != 2 || v[0] < 1) throw Error(ErrorKind::ParseError, "cartesian:<n>,<extent>");
    return disk_grid(static_cast<std::size_t>(v[0]), v[1]);
  }
  throw Error(ErrorKind::ParseError, "unknown grid: " + text);
}

// ---- CSV input ---------------------------------------------------------------

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;

  int column(const std::string& name) const {
    for (std::size_t i = 0; i < header.size(); ++i)
      if (header[i] == name) return static_cast<int>(i);
    return -1;
  }
};

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    while (!cell.empty() && (cell.back() == '\r' || cell.back() == ' ')) cell.pop_back();
    while (!cell.empty() && cell.front() == ' ') cell.erase(cell.begin());
    out.push_back(cell);
  }
  return out;
}

Table read_table(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw Error(ErrorKind::ParseError, "cannot open " + path);
    in = &file;
  }
  Table t;
  std::string line;
  while (std::getline(*in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto cells = split_csv(line);
    if (t.header.empty()) {
      t.header = cells;
      continue;
    }
    if (cells.size() != t.header.size()) throw Error(ErrorKind::ParseError, "ragged CSV row: " + line);
    std::vector<double> row;
    for (const auto& c : cells) row.push_back(c.empty() ? std::nan("") : parse_real(c));
    t.rows.push_back(std::move(row));
  }
  if (t.header.empty()) throw Error(ErrorKind::ParseError, "CSV header required");
  return t;
}

BoundarySequenceSample sample_from_table(const Table& t, FitAbscissa abscissa) {
  const int re = t.column("re"), im = t.column("im"), ratio = t.column("ratio"), dist = t.column("distance");
  if (ratio < 0) throw Error(ErrorKind::ParseError, "CSV needs a 'ratio' column");
  if (abscissa == FitAbscissa::Distance && dist < 0) throw Error(ErrorKind::ParseError, "CSV needs a 'distance' column");
  if (abscissa == FitAbscissa::LogModulus && re < 0) throw Error(ErrorKind::ParseError, "CSV needs 're' and 'im' columns");
  BoundarySequenceSample s;
  for (const auto& row : t.rows) {
    s.ratios.push_back(row[ratio]);
    if (dist >= 0) s.distances.push_back(row[dist]);
    if (re >= 0) s.points.emplace_back(row[re], im >= 0 ? row[im] : 0.0);
  }
  return s;
}

Json estimate_json(const DecayEstimate& e) {
  return {{"beta", e.beta},
          {"c", e.c},
          {"r2", e.r2},
          {"classification", to_string(e.classification)},
          {"abscissa", e.abscissa == FitAbscissa::Distance ? "distance" : "log_modulus"},
          {"equal_points", e.equal_points},
          {"used_points", e.used_points}};
}

void print_estimate(const Globals& g, const DecayEstimate& e) {
  if (want_json(g, true)) return print_json(estimate_json(e));
  std::cout << "beta,c,r2,classification,abscissa,equal_points,used_points\n"
            << num(e.beta) << ',' << num(e.c) << ',' << num(e.r2) << ',' << to_string(e.classification) << ','
            << (e.abscissa == FitAbscissa::Distance ? "distance" : "log_modulus") << ',' << e.equal_points << ','
            << e.used_points << "\n";
}

FitAbscissa parse_abscissa(const std::string& s) {
  if (s == "distance") return FitAbscissa::Distance;
  if (s == "logmod") return FitAbscissa::LogModulus;
  throw Error(ErrorKind::ParseError, "abscissa must be distance or logmod");
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::UnknownSuite:
    case ErrorKind::BadParameter: return 2;
    default: return 1;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Conformal metric densities, hyperbolic distances and verification suites"};
  app.require_subcommand(1);
  Globals g;
  app.add_option("--output", g.output, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  app.add_option("--seed", g.seed, "seed for sampled points")->capture_default_str();
  app.add_option("--tol", g.tolerances, "tolerance override name=value (repeatable)");

  // density
  auto* density = app.add_subcommand("density", "evaluate a metric density");
  std::string metric_spec, z_text, grid_text;
  density->add_option("--metric,--domain", metric_spec, "metric spec")->required();
  auto* z_opt = density->add_option("--z", z_text, "point re,im");
  density->add_option("--grid", grid_text, "polar:<rmin>,<rmax>,<nr>,<ntheta> or cartesian:<n>,<extent>")
      ->excludes(z_opt);

  // curvature
  auto* curvature = app.add_subcommand("curvature", "five-point Gauss curvature");
  double h = kDefaultStencil;
  bool no_shrink = false;
  curvature->add_option("--metric,--domain", metric_spec, "metric spec")->required();
  curvature->add_option("--z", z_text, "point re,im")->required();
  curvature->set_help_flag("--help", "Print this help message and exit");
  curvature->add_option("--h", h, "stencil size")->capture_default_str();
  curvature->add_flag("--no-shrink", no_shrink, "fail instead of shrinking the stencil near the edge");

  // distance
  auto* distance = app.add_subcommand("distance", "hyperbolic distance");
  std::string domain_spec, z1_text, z2_text;
  int winding = kDefaultWinding, oracle_grid = 0, oracle_stencil = kDefaultOracleStencil;
  distance->add_option("--domain", domain_spec, "domain spec")->required();
  distance->add_option("--z1", z1_text, "first point re,im")->required();
  distance->add_option("--z2", z2_text, "second point re,im")->required();
  distance->add_option("--winding", winding, "initial deck winding bound")->capture_default_str();
  distance->add_option("--oracle-grid", oracle_grid, "use the grid oracle with about N*N nodes");
  distance->add_option("--oracle-stencil", oracle_stencil, "oracle stencil radius")->capture_default_str();

  // verify
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  std::string suite;
  std::size_t grid = 50;
  verify->add_option("suite", suite, "suite name")->required();
  verify->add_option("--grid", grid, "Ahlfors grid side")->capture_default_str();

  // rigidity
  auto* rigidity = app.add_subcommand("rigidity", "boundary decay fits");
  rigidity->require_subcommand(1);
  std::string input, setting_text, abscissa_text = "distance";
  double margin = kClassifyMargin, beta = std::nan(""), r2 = 1.0;
  auto* fit = rigidity->add_subcommand("fit", "fit 1 - ratio against distance or log|z|");
  fit->add_option("--input", input, "CSV with columns re,im,ratio,distance ('-' for stdin)")->required();
  fit->add_option("--abscissa", abscissa_text, "distance or logmod")->capture_default_str();
  fit->add_option("--setting", setting_text, "general | puncture | conical:<alpha>");
  auto* classify = rigidity->add_subcommand("classify", "classify a decay estimate");
  classify->add_option("--setting", setting_text, "general | puncture | conical:<alpha>")->required();
  auto* in_opt = classify->add_option("--input", input, "CSV sample to fit first");
  classify->add_option("--beta", beta, "fitted exponent")->excludes(in_opt);
  classify->add_option("--r2", r2, "fit quality")->capture_default_str();
  classify->add_option("--margin", margin, "classification margin")->capture_default_str();
  auto* sample = rigidity->add_subcommand("sample", "emit re,im,ratio,distance along z = 10^-k e^{i arg}");
  std::string reference_spec;
  std::string q_text = "0.5";
  double kmin = 2, kmax = 8, kstep = 1, arg = 0.0;
  sample->add_option("--metric", metric_spec, "metric spec")->required();
  sample->add_option("--reference", reference_spec, "reference metric spec")->required();
  sample->add_option("--q", q_text, "base point re,im")->capture_default_str();
  sample->add_option("--kmin", kmin)->capture_default_str();
  sample->add_option("--kmax", kmax)->capture_default_str();
  sample->add_option("--kstep", kstep)->capture_default_str();
  sample->add_option("--arg", arg, "argument of the sample ray")->capture_default_str();

  // liouville
  auto* liouville = app.add_subcommand("liouville", "radial curvature -4 equation");
  liouville->require_subcommand(1);
  double w0 = 0, dw0 = 0, t0 = -1, t1 = -5;
  int steps = 10000;
  bool truncate = false;
  auto* solve = liouville->add_subcommand("solve", "RK4 solution of w'' = 4 exp(2w)");
  solve->add_option("--w0", w0)->required();
  solve->add_option("--dw0", dw0)->required();
  solve->add_option("--t0", t0)->required();
  solve->add_option("--t1", t1)->required();
  solve->add_option("--steps", steps)->capture_default_str();
  solve->add_flag("--truncate", truncate, "stop at blow-up instead of failing");
  auto* lclassify = liouville->add_subcommand("classify", "classify a closed-form family's singularity");
  std::string family;
  double ct0 = -20, ct1 = -1;
  std::size_t cn = 4000;
  lclassify->add_option("--family", family, "pdisk | pdiskR:<R> | conical:<alpha> | conical-scaled:<alpha>,<c>")
      ->required();
  lclassify->add_option("--t0", ct0)->capture_default_str();
  lclassify->add_option("--t1", ct1)->capture_default_str();
  lclassify->add_option("--n", cn)->capture_default_str();

  for (auto* sub : {density, curvature, distance, verify, rigidity, liouville}) sub->fallthrough();
  for (auto* sub : {fit, classify, sample, solve, lclassify}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*density) {
      const MetricDensity metric = parse_metric(metric_spec);
      std::vector<Complex> points;
      if (!grid_text.empty()) points = parse_grid(grid_text);
      else if (!z_text.empty()) points.push_back(parse_complex(z_text));
      else throw Error(ErrorKind::ParseError, "density needs --z or --grid");
      if (want_json(g)) {
        Json rows = Json::array();
        for (Complex z : points)
          rows.push_back({{"re", z.real()}, {"im", z.imag()}, {"lambda", metric(z)}, {"log_lambda", metric.log_at(z)}});
        print_json({{"metric", metric.label()}, {"rows", rows}});
      } else {
        std::cout << "re,im,lambda,log_lambda\n";
        for (Complex z : points)
          std::cout << num(z.real()) << ',' << num(z.imag()) << ',' << num(metric(z)) << ',' << num(metric.log_at(z))
                    << "\n";
      }
      return 0;
    }

    if (*curvature) {
      const MetricDensity metric = parse_metric(metric_spec);
      const CurvatureResult c = curvature_at(metric, parse_complex(z_text), h, !no_shrink);
      if (want_json(g)) print_json({{"curvature", c.value}, {"h_used", c.h_used}});
      else std::cout << "curvature," << num(c.value) << ',' << num(c.h_used) << "\n";
      return 0;
    }

    if (*distance) {
      const DomainModel domain = parse_domain(domain_spec);
      const Complex z1 = parse_complex(z1_text), z2 = parse_complex(z2_text);
      const DistanceResult d = oracle_grid > 0 ? geodesic_oracle(domain, z1, z2, oracle_grid, oracle_stencil)
                                               : hyperbolic_distance(domain, z1, z2, winding);
      if (want_json(g))
        print_json({{"distance", d.value}, {"method", to_string(d.method)}, {"deck_index", d.deck_index}});
      else
        std::cout << "distance," << num(d.value) << ',' << to_string(d.method) << ',' << d.deck_index << "\n";
      return 0;
    }

    if (*verify) {
      SuiteConfig config;
      config.suite = suite;
      config.seed = g.seed;
      config.grid = grid;
      config.tolerances = parse_tolerances(g.tolerances);
      if (!is_known_suite(suite)) throw Error(ErrorKind::UnknownSuite, "unknown suite: " + suite);
      if (is_witness_suite(suite)) {
        const WitnessRun run = run_witness(config);
        if (want_json(g)) {
          Json j = witness_json(run.limit, run.report.pass());
          j["report"] = report_json(run.report);
          print_json(j);
        } else {
          std::cout << "sample,functional_value\n";
          for (std::size_t i = 0; i < run.limit.functional_values.size(); ++i) {
            const Complex z = run.limit.sample_points[i];
            std::cout << num(z.imag() == 0.0 ? z.real() : std::abs(z)) << ',' << num(run.limit.functional_values[i])
                      << "\n";
          }
          std::cout << "# extrapolated_limit=" << num(run.limit.extrapolated_limit)
                    << " expected=" << num(run.limit.expected) << " pass=" << (run.report.pass() ? "true" : "false")
                    << "\n";
        }
        return run.report.pass() ? 0 : 1;
      }
      const VerificationReport report = run_suite(config);
      if (want_json(g)) print_json(report_json(report));
      else print_report_csv(report);
      return report.pass() ? 0 : 1;
    }

    if (*fit) {
      const Table t = read_table(input);
      DecayEstimate e = decay_exponent_fit(sample_from_table(t, parse_abscissa(abscissa_text)), parse_abscissa(abscissa_text));
      if (!setting_text.empty()) e.classification = classify_boundary_condition(e, parse_setting(setting_text));
      print_estimate(g, e);
      return 0;
    }

    if (*classify) {
      const BoundarySetting setting = parse_setting(setting_text);
      DecayEstimate e;
      if (!input.empty()) {
        e = decay_exponent_fit(sample_from_table(read_table(input), setting.abscissa()), setting.abscissa());
      } else {
        if (std::isnan(beta)) throw Error(ErrorKind::ParseError, "classify needs --beta or --input");
        e.beta = beta;
        e.r2 = r2;
        e.abscissa = setting.abscissa();
      }
      e.classification = classify_boundary_condition(e, setting, margin);
      print_estimate(g, e);
      return 0;
    }

    if (*sample) {
      const MetricDensity metric = parse_metric(metric_spec);
      const MetricDensity reference = parse_metric(reference_spec);
      if (!reference.region().model) throw Error(ErrorKind::ParseError, "reference needs a model domain");
      const DomainModel domain = *reference.region().model;
      std::vector<Complex> points;
      for (double k = kmin; k <= kmax + 1e-9; k += kstep) points.push_back(std::polar(std::pow(10.0, -k), arg));
      const auto s = make_boundary_sample(metric, reference, points, parse_complex(q_text), [&](Complex a, Complex b) {
        return hyperbolic_distance(domain, a, b).value;
      });
      std::cout << "re,im,ratio,distance\n";
      for (std::size_t i = 0; i < s.points.size(); ++i)
        std::cout << num(s.points[i].real()) << ',' << num(s.points[i].imag()) << ',' << num(s.ratios[i]) << ','
                  << num(s.distances[i]) << "\n";
      return 0;
    }

    if (*solve) {
      const RadialProfile p =
          integrate_radial(w0, dw0, t0, t1, steps, truncate ? BlowUpPolicy::Truncate : BlowUpPolicy::Throw);
      if (want_json(g)) {
        Json lambda = Json::array(), energy = Json::array();
        for (std::size_t i = 0; i < p.size(); ++i) {
          lambda.push_back(p.lambda(i));
          energy.push_back(p.energy(i));
        }
        print_json({{"t", p.t}, {"w", p.w}, {"lambda", lambda}, {"E", energy}, {"truncated", p.truncated}});
      } else {
        std::cout << "t,w,lambda,E\n";
        for (std::size_t i = 0; i < p.size(); ++i)
          std::cout << num(p.t[i]) << ',' << num(p.w[i]) << ',' << num(p.lambda(i)) << ',' << num(p.energy(i)) << "\n";
        if (p.truncated) std::cout << "# truncated at blow-up\n";
      }
      return 0;
    }

    if (*lclassify) {
      const RadialFamily f = parse_family(family);
      const SingularityProfile s = classify_singularity(f.sample(ct0, std::min(ct1, f.t_max()), cn));
      if (want_json(g, true)) {
        Json j = {{"family", f.name()}, {"kind", to_string(s.kind)}, {"remainder_bound", s.remainder_bound}};
        if (s.kind == SingularityProfile::Kind::Conical) j["alpha"] = s.alpha;
        print_json(j);
      } else {
        std::cout << "family,kind,alpha,remainder_bound\n"
                  << f.name() << ',' << to_string(s.kind) << ','
                  << (s.kind == SingularityProfile::Kind::Conical ? num(s.alpha) : "") << ','
                  << num(s.remainder_bound) << "\n";
      }
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
