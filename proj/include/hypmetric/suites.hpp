#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hypmetric/report.hpp"
#include "hypmetric/witness.hpp"

namespace hypmetric {

struct SuiteConfig {
  std::string suite;
  /// Per-suite tolerance overrides, keyed by the names listed in the README.
  std::map<std::string, double> tolerances;
  std::uint64_t seed = 42;
  /// Side of the Ahlfors sample grids.
  std::size_t grid = 50;

  double tol(const std::string& name, double fallback) const;
};

const std::vector<std::string>& suite_names();
bool is_known_suite(std::string_view name);
/// Suites that produce a WitnessLimit (example1, phi, disk-sharpness,
/// annulus-sharpness:<r>).
bool is_witness_suite(std::string_view name);

/// Throws UnknownSuite for names outside suite_names().
VerificationReport run_suite(const SuiteConfig& config);

/// Witness sample values together with their report.
struct WitnessRun {
  WitnessLimit limit;
  VerificationReport report;
};
WitnessRun run_witness(const SuiteConfig& config);

VerificationReport curvature_suite(const SuiteConfig& config);
VerificationReport ahlfors_suite(const SuiteConfig& config);
VerificationReport beardon_minda_suite(const SuiteConfig& config);
VerificationReport harnack_suite(const SuiteConfig& config);
VerificationReport harnack_conical_suite(const SuiteConfig& config);
VerificationReport hopf_suite(const SuiteConfig& config);
VerificationReport hopf_conical_suite(const SuiteConfig& config);
VerificationReport aux_solutions_suite(const SuiteConfig& config);
VerificationReport lemma44_suite(const SuiteConfig& config);
VerificationReport decay_ratio_suite(const SuiteConfig& config);
VerificationReport dichotomy_suite(const SuiteConfig& config);

}  // namespace hypmetric
