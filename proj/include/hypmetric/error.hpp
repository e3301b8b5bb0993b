#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hypmetric {

using Complex = std::complex<double>;

enum class ErrorKind {
  OutsideDomain,
  SingularPoint,
  StencilOutsideDomain,
  NonpositiveDensity,
  WindingBoundTooSmall,
  DegenerateSample,
  TooFewPoints,
  NumericOverflow,
  BadParameter,
  GridTooShort,
  WrongSingularityOrder,
  ParseError,
  UnknownSuite,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// CLI can map it to an exit code and tests can match on it.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace hypmetric
