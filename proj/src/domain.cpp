#include "hypmetric/domain.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hypmetric {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OutsideDomain: return "OutsideDomain";
    case ErrorKind::SingularPoint: return "SingularPoint";
    case ErrorKind::StencilOutsideDomain: return "StencilOutsideDomain";
    case ErrorKind::NonpositiveDensity: return "NonpositiveDensity";
    case ErrorKind::WindingBoundTooSmall: return "WindingBoundTooSmall";
    case ErrorKind::DegenerateSample: return "DegenerateSample";
    case ErrorKind::TooFewPoints: return "TooFewPoints";
    case ErrorKind::NumericOverflow: return "NumericOverflow";
    case ErrorKind::BadParameter: return "BadParameter";
    case ErrorKind::GridTooShort: return "GridTooShort";
    case ErrorKind::WrongSingularityOrder: return "WrongSingularityOrder";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::UnknownSuite: return "UnknownSuite";
  }
  return "Unknown";
}

DomainModel DomainModel::disk() { return {Kind::Disk, 0.0}; }
DomainModel DomainModel::punctured_disk() { return {Kind::PuncturedDisk, 0.0}; }

DomainModel DomainModel::punctured_disk_r(double R) {
  if (!(R >= 1.0) || !std::isfinite(R))
    throw Error(ErrorKind::BadParameter, "punctured disk radius must be >= 1");
  return {Kind::PuncturedDiskR, R};
}

DomainModel DomainModel::annulus(double r) {
  if (!(r > 0.0 && r < 1.0)) throw Error(ErrorKind::BadParameter, "annulus needs 0 < r < 1");
  return {Kind::Annulus, r};
}

DomainModel DomainModel::half_plane() { return {Kind::HalfPlane, 0.0}; }

DomainModel DomainModel::strip(double h) {
  if (!(h > 0.0) || !std::isfinite(h)) throw Error(ErrorKind::BadParameter, "strip needs h > 0");
  return {Kind::Strip, h};
}

bool DomainModel::contains(Complex z) const {
  const double m = std::abs(z);
  switch (kind_) {
    case Kind::Disk: return m < 1.0;
    case Kind::PuncturedDisk: return m > 0.0 && m < 1.0;
    case Kind::PuncturedDiskR: return m > 0.0 && m < param_;
    case Kind::Annulus: return m > param_ && m < 1.0;
    case Kind::HalfPlane: return z.imag() > 0.0;
    case Kind::Strip: return z.imag() > 0.0 && z.imag() < param_;
  }
  return false;
}

bool DomainModel::is_singular(Complex z) const {
  return (kind_ == Kind::PuncturedDisk || kind_ == Kind::PuncturedDiskR) && z == Complex{};
}

double DomainModel::edge_distance(Complex z) const {
  if (!contains(z)) return 0.0;
  const double m = std::abs(z);
  switch (kind_) {
    case Kind::Disk: return 1.0 - m;
    case Kind::PuncturedDisk: return std::min(m, 1.0 - m);
    case Kind::PuncturedDiskR: return std::min(m, param_ - m);
    case Kind::Annulus: return std::min(m - param_, 1.0 - m);
    case Kind::HalfPlane: return z.imag();
    case Kind::Strip: return std::min(z.imag(), param_ - z.imag());
  }
  return 0.0;
}

std::string DomainModel::name() const {
  switch (kind_) {
    case Kind::Disk: return "disk";
    case Kind::PuncturedDisk: return "pdisk";
    case Kind::PuncturedDiskR: return "pdiskR:" + std::to_string(param_);
    case Kind::Annulus: return "annulus:" + std::to_string(param_);
    case Kind::HalfPlane: return "halfplane";
    case Kind::Strip: return "strip:" + std::to_string(param_);
  }
  return "?";
}

Region Region::from(const DomainModel& domain) {
  Region region;
  region.contains = [domain](Complex z) { return domain.contains(z); };
  region.edge_distance = [domain](Complex z) { return domain.edge_distance(z); };
  if (domain.kind() == DomainModel::Kind::PuncturedDisk ||
      domain.kind() == DomainModel::Kind::PuncturedDiskR)
    region.singular_points.push_back(Complex{});
  region.model = domain;
  region.name = domain.name();
  return region;
}

Region Region::user(std::function<bool(Complex)> contains, std::string name,
                    std::vector<Complex> singular_points) {
  Region region;
  region.contains = std::move(contains);
  region.singular_points = std::move(singular_points);
  region.name = std::move(name);
  return region;
}

bool Region::is_singular(Complex z) const {
  return std::find(singular_points.begin(), singular_points.end(), z) != singular_points.end();
}

}  // namespace hypmetric
