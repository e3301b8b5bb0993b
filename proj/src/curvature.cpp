#include "hypmetric/curvature.hpp"

#include <array>
#include <cmath>

namespace hypmetric {

double discrete_laplacian(const std::function<double(Complex)>& f, Complex z, double h) {
  const Complex dx{h, 0.0};
  const Complex dy{0.0, h};
  const double sum = (f(z + dx) + f(z - dx)) + (f(z + dy) + f(z - dy));
  return (sum - 4.0 * f(z)) / (h * h);
}

CurvatureResult curvature_at(const MetricDensity& metric, Complex z, double h, bool shrink) {
  if (!(h > 0.0)) throw Error(ErrorKind::BadParameter, "stencil size must be positive");
  const Region& region = metric.region();
  if (region.is_singular(z)) throw Error(ErrorKind::SingularPoint, "curvature at a singular point");
  if (!region.contains(z)) throw Error(ErrorKind::OutsideDomain, "curvature point outside domain");

  if (shrink && region.edge_distance) {
    const double edge = region.edge_distance(z);
    if (h >= edge) h = 0.5 * edge;
  }

  const std::array<Complex, 5> stencil{z, z + Complex{h, 0.0}, z - Complex{h, 0.0},
                                       z + Complex{0.0, h}, z - Complex{0.0, h}};
  std::array<double, 5> logs{};
  for (std::size_t i = 0; i < stencil.size(); ++i) {
    if (!region.contains(stencil[i]) || region.is_singular(stencil[i]))
      throw Error(ErrorKind::StencilOutsideDomain, "stencil leaves " + region.name);
    logs[i] = metric.log_at(stencil[i]);
    if (!std::isfinite(logs[i]))
      throw Error(ErrorKind::NonpositiveDensity, "density vanishes on the stencil");
  }
  const double lap = ((logs[1] + logs[2]) + (logs[3] + logs[4]) - 4.0 * logs[0]) / (h * h);
  return {-lap * std::exp(-2.0 * logs[0]), h};
}

}  // namespace hypmetric
