#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace hypmetric {

/// Where a check's expected value comes from.
enum class Provenance {
  Exact,      // identity or trivially exact value
  Derived,    // computed by an independent oracle or closed-form expansion
  Published,  // constant quoted from the literature
};
std::string_view to_string(Provenance p);

struct Check {
  std::string name;
  double value = 0.0;
  double expected = 0.0;
  double tol = 0.0;
  bool pass = false;
  Provenance provenance = Provenance::Derived;
};

/// |value - expected| <= tol.
Check check_near(std::string name, double value, double expected, double tol, Provenance p);
/// value <= bound + tol.
Check check_at_most(std::string name, double value, double bound, double tol, Provenance p);
/// value >= bound - tol.
Check check_at_least(std::string name, double value, double bound, double tol, Provenance p);

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<Check> checks;
  /// Free-form assumptions recorded with the report (e.g. curvature bounds
  /// that were spot-checked rather than certified).
  std::vector<std::string> notes;

  bool pass() const;
  void add(Check check) { checks.push_back(std::move(check)); }
  void append(const VerificationReport& other);
};

}  // namespace hypmetric
