#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hypmetric/error.hpp"

namespace hypmetric {

/// Model hyperbolic domains with closed-form hyperbolic densities.
class DomainModel {
 public:
  enum class Kind { Disk, PuncturedDisk, PuncturedDiskR, Annulus, HalfPlane, Strip };

  static DomainModel disk();
  static DomainModel punctured_disk();
  /// 0 < |z| < R, R >= 1.
  static DomainModel punctured_disk_r(double R);
  /// r < |z| < 1, 0 < r < 1.
  static DomainModel annulus(double r);
  static DomainModel half_plane();
  /// 0 < Im z < h.
  static DomainModel strip(double h);

  Kind kind() const { return kind_; }
  /// R for PuncturedDiskR, r for Annulus, h for Strip; 0 otherwise.
  double parameter() const { return param_; }

  bool contains(Complex z) const;
  bool is_singular(Complex z) const;
  /// Euclidean distance from z to the complement (boundary and punctures).
  double edge_distance(Complex z) const;
  std::string name() const;

  friend bool operator==(const DomainModel&, const DomainModel&) = default;

 private:
  DomainModel(Kind kind, double param) : kind_(kind), param_(param) {}

  Kind kind_;
  double param_;
};

/// Region a density lives on. Either a model domain or a user predicate; a
/// user region without an edge-distance function cannot shrink stencils.
struct Region {
  std::function<bool(Complex)> contains;
  std::function<double(Complex)> edge_distance;
  std::vector<Complex> singular_points;
  std::optional<DomainModel> model;
  std::string name;

  static Region from(const DomainModel& domain);
  static Region user(std::function<bool(Complex)> contains, std::string name,
                     std::vector<Complex> singular_points = {});

  bool is_singular(Complex z) const;
};

}  // namespace hypmetric
