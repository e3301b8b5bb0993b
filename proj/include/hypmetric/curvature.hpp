#pragma once

#include <functional>

#include "hypmetric/metric.hpp"

namespace hypmetric {

inline constexpr double kDefaultStencil = 1e-3;

struct CurvatureResult {
  double value;
  /// Stencil size actually used; smaller than requested near the domain edge.
  double h_used;
};

/// Five-point discrete Laplacian of f at z.
double discrete_laplacian(const std::function<double(Complex)>& f, Complex z, double h);

/// Gauss curvature -Lap_h(log lambda)(z) / lambda(z)^2.
///
/// With `shrink` set, a stencil reaching the domain edge is reduced to half the
/// edge distance (model regions only). Otherwise, or for user regions, such a
/// stencil raises StencilOutsideDomain. A vanishing density anywhere on the
/// stencil raises NonpositiveDensity.
CurvatureResult curvature_at(const MetricDensity& metric, Complex z, double h = kDefaultStencil,
                             bool shrink = true);

}  // namespace hypmetric
