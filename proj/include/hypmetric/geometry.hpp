#pragma once

#include <memory>
#include <string_view>
#include <vector>

#include "hypmetric/domain.hpp"

namespace hypmetric {

/// Distances use the curvature -4 normalization: every distance is this
/// factor times the corresponding curvature -1 distance.
inline constexpr double kCurvatureFactor = 0.5;

inline constexpr int kDefaultWinding = 8;
inline constexpr int kMaxWinding = 1024;

enum class DistanceMethod { ClosedForm, LiftMinimization, GridOracle };
std::string_view to_string(DistanceMethod method);

struct DistanceResult {
  double value = 0.0;
  DistanceMethod method = DistanceMethod::ClosedForm;
  /// Deck translation 2*pi*k applied to the second lift; 0 when unused.
  int deck_index = 0;
};

DistanceResult dist_disk(Complex z1, Complex z2);
DistanceResult dist_halfplane(Complex w1, Complex w2);
/// Strip 0 < Im < h, through w = exp(pi * zeta / h) onto the half-plane.
DistanceResult dist_strip(Complex z1, Complex z2, double h);

/// Lift through zeta -> exp(i zeta) from the half-plane onto 0 < |z| < 1 and
/// minimise over deck translations |k| <= winding_bound. Throws
/// WindingBoundTooSmall when the minimiser sits on the bound.
DistanceResult dist_punctured_disk(Complex z1, Complex z2, int winding_bound = kDefaultWinding);

/// Same lift from the strip 0 < Im zeta < log(1/r) onto r < |z| < 1.
DistanceResult dist_annulus(Complex z1, Complex z2, double r, int winding_bound = kDefaultWinding);

/// Closed form or lift distance for any model domain. Winding bounds start at
/// `winding_bound` and double up to kMaxWinding.
DistanceResult hyperbolic_distance(const DomainModel& domain, Complex z1, Complex z2,
                                   int winding_bound = kDefaultWinding);

/// Shortest paths on a conformal chart grid with Simpson edge weights.
///
/// Disk, half-plane and strip use Cartesian charts; punctured disks and
/// annuli use (log|z|, arg z) with periodic argument. Edges join every node to
/// the primitive offsets (dx, dy) with max(|dx|, |dy|) <= stencil_radius;
/// stencil_radius = 1 is the plain 8-neighbour graph.
class GeodesicGrid {
 public:
  /// `cover` lists points the chart must contain with margin; they size the
  /// bounding box for unbounded charts.
  GeodesicGrid(const DomainModel& domain, int grid_n, int stencil_radius,
               const std::vector<Complex>& cover);
  ~GeodesicGrid();
  GeodesicGrid(GeodesicGrid&&) noexcept;
  GeodesicGrid& operator=(GeodesicGrid&&) noexcept;

  DistanceResult distance(Complex z1, Complex z2) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

inline constexpr int kDefaultOracleStencil = 4;

DistanceResult geodesic_oracle(const DomainModel& domain, Complex z1, Complex z2, int grid_n,
                               int stencil_radius = kDefaultOracleStencil);

struct Lemma44Constants {
  double c1;
  double c2;
  double gamma;
  /// Point on |w| = |q| where the distance to q is maximal.
  Complex farthest;
};

/// Comparability constants on the punctured disk for the base point q.
Lemma44Constants lemma44_constants(Complex q, double R = 1.0);

/// exp(-2 d_D(z, 0)) / (1 - |z|).
double covering_decay_ratio(Complex z);

}  // namespace hypmetric
