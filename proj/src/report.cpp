#include "hypmetric/report.hpp"

#include <algorithm>
#include <cmath>

namespace hypmetric {

std::string_view to_string(Provenance p) {
  switch (p) {
    case Provenance::Exact: return "exact";
    case Provenance::Derived: return "derived";
    case Provenance::Published: return "published";
  }
  return "?";
}

Check check_near(std::string name, double value, double expected, double tol, Provenance p) {
  const bool ok = std::abs(value - expected) <= tol;
  return {std::move(name), value, expected, tol, ok, p};
}

Check check_at_most(std::string name, double value, double bound, double tol, Provenance p) {
  return {std::move(name), value, bound, tol, value <= bound + tol, p};
}

Check check_at_least(std::string name, double value, double bound, double tol, Provenance p) {
  return {std::move(name), value, bound, tol, value >= bound - tol, p};
}

bool VerificationReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void VerificationReport::append(const VerificationReport& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

}  // namespace hypmetric
