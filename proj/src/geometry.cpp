#include "hypmetric/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <queue>
#include <unordered_map>

#include "hypmetric/metric.hpp"

namespace hypmetric {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();

void require(bool ok, const char* what) {
  if (!ok) throw Error(ErrorKind::OutsideDomain, what);
}

/// Curvature -1 distance between (x1, y1) and (x2, y2) in the strip
/// 0 < y < height, via the map to the half-plane.
double strip_distance_unit(double dx, double y1, double y2, double height) {
  const double da = kPi * dx / height;
  const double b1 = kPi * y1 / height;
  const double b2 = kPi * y2 / height;
  const double sb = std::sin(b1) * std::sin(b2);
  if (std::abs(da) > 600.0) return std::abs(da) - std::log(sb);
  const double sh = std::sinh(0.5 * da);
  const double sn = std::sin(0.5 * (b1 - b2));
  return 2.0 * std::asinh(std::sqrt((sh * sh + sn * sn) / sb));
}

double half_plane_unit(Complex w1, Complex w2) {
  return 2.0 * std::asinh(std::abs(w1 - w2) / (2.0 * std::sqrt(w1.imag() * w2.imag())));
}

/// Logarithmic lift zeta = arg z + i log(outer/|z|).
Complex log_lift(Complex z, double outer = 1.0) {
  return {std::arg(z), std::log(outer / std::abs(z))};
}

/// Minimises dist(k) over deck indices ordered 0, -1, 1, -2, 2, ...
template <class F>
DistanceResult minimise_over_deck(int winding_bound, F&& dist) {
  if (winding_bound < 1) throw Error(ErrorKind::BadParameter, "winding bound must be >= 1");
  DistanceResult best{dist(0), DistanceMethod::LiftMinimization, 0};
  for (int m = 1; m <= winding_bound; ++m) {
    for (int k : {-m, m}) {
      const double d = dist(k);
      if (d < best.value) best = {d, DistanceMethod::LiftMinimization, k};
    }
  }
  if (std::abs(best.deck_index) == winding_bound)
    throw Error(ErrorKind::WindingBoundTooSmall,
                "minimum attained at deck index " + std::to_string(best.deck_index));
  return best;
}

}  // namespace

std::string_view to_string(DistanceMethod method) {
  switch (method) {
    case DistanceMethod::ClosedForm: return "ClosedForm";
    case DistanceMethod::LiftMinimization: return "LiftMinimization";
    case DistanceMethod::GridOracle: return "GridOracle";
  }
  return "?";
}

DistanceResult dist_disk(Complex z1, Complex z2) {
  const double m1 = std::abs(z1), m2 = std::abs(z2);
  require(m1 < 1.0 && m2 < 1.0, "disk distance needs |z| < 1");
  const double denom = std::sqrt((1.0 - m1) * (1.0 + m1) * (1.0 - m2) * (1.0 + m2));
  return {kCurvatureFactor * 2.0 * std::asinh(std::abs(z1 - z2) / denom), DistanceMethod::ClosedForm, 0};
}

DistanceResult dist_halfplane(Complex w1, Complex w2) {
  require(w1.imag() > 0.0 && w2.imag() > 0.0, "half-plane distance needs Im > 0");
  return {kCurvatureFactor * half_plane_unit(w1, w2), DistanceMethod::ClosedForm, 0};
}

DistanceResult dist_strip(Complex z1, Complex z2, double h) {
  require(z1.imag() > 0.0 && z1.imag() < h && z2.imag() > 0.0 && z2.imag() < h,
          "strip distance needs 0 < Im < h");
  return {kCurvatureFactor * strip_distance_unit(z2.real() - z1.real(), z1.imag(), z2.imag(), h),
          DistanceMethod::ClosedForm, 0};
}

DistanceResult dist_punctured_disk(Complex z1, Complex z2, int winding_bound) {
  const DomainModel domain = DomainModel::punctured_disk();
  if (z1 == 0.0 || z2 == 0.0) throw Error(ErrorKind::SingularPoint, "z = 0 is the puncture");
  require(domain.contains(z1) && domain.contains(z2), "punctured disk distance needs 0 < |z| < 1");
  if (z1 == z2) return {0.0, DistanceMethod::LiftMinimization, 0};
  const Complex a = log_lift(z1);
  const Complex b = log_lift(z2);
  return minimise_over_deck(winding_bound, [&](int k) {
    return kCurvatureFactor * half_plane_unit(a, b + Complex{2.0 * kPi * k, 0.0});
  });
}

DistanceResult dist_annulus(Complex z1, Complex z2, double r, int winding_bound) {
  const DomainModel domain = DomainModel::annulus(r);
  require(domain.contains(z1) && domain.contains(z2), "annulus distance needs r < |z| < 1");
  if (z1 == z2) return {0.0, DistanceMethod::LiftMinimization, 0};
  const double height = -std::log(r);
  const Complex a = log_lift(z1);
  const Complex b = log_lift(z2);
  return minimise_over_deck(winding_bound, [&](int k) {
    const double dx = b.real() + 2.0 * kPi * k - a.real();
    return kCurvatureFactor * strip_distance_unit(dx, a.imag(), b.imag(), height);
  });
}

DistanceResult hyperbolic_distance(const DomainModel& domain, Complex z1, Complex z2,
                                   int winding_bound) {
  switch (domain.kind()) {
    case DomainModel::Kind::Disk: return dist_disk(z1, z2);
    case DomainModel::Kind::HalfPlane: return dist_halfplane(z1, z2);
    case DomainModel::Kind::Strip: return dist_strip(z1, z2, domain.parameter());
    default: break;
  }
  for (int bound = winding_bound;; bound *= 2) {
    try {
      switch (domain.kind()) {
        case DomainModel::Kind::PuncturedDisk: return dist_punctured_disk(z1, z2, bound);
        case DomainModel::Kind::PuncturedDiskR: {
          const double R = domain.parameter();
          require(domain.contains(z1) && domain.contains(z2), "point outside punctured disk");
          return dist_punctured_disk(z1 / R, z2 / R, bound);
        }
        case DomainModel::Kind::Annulus: return dist_annulus(z1, z2, domain.parameter(), bound);
        default: throw Error(ErrorKind::BadParameter, "unsupported domain");
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::WindingBoundTooSmall || bound >= kMaxWinding) throw;
    }
  }
}

// ---------------------------------------------------------------------------
// Grid oracle

struct GeodesicGrid::Impl {
  enum class Chart { Cartesian, LogPolar };

  DomainModel domain;
  MetricDensity metric;
  Chart chart = Chart::Cartesian;
  bool periodic = false;
  int nu = 0, nv = 0;
  int radius = 1;
  double u0 = 0.0, du = 0.0, v0 = 0.0, dv = 0.0;
  std::vector<std::pair<int, int>> offsets;
  std::vector<double> mu;
  std::vector<double> weights;  // empty when computed on the fly

  Impl(const DomainModel& d) : domain(d), metric(hyperbolic_metric(d)) {}

  Complex to_z(double u, double v) const {
    return chart == Chart::Cartesian ? Complex{u, v} : std::polar(std::exp(u), v);
  }

  std::pair<double, double> to_chart(Complex z) const {
    if (chart == Chart::Cartesian) return {z.real(), z.imag()};
    return {std::log(std::abs(z)), std::arg(z)};
  }

  /// Chart density: lambda(z(u, v)) |dz/dw|; NaN outside the domain.
  double density(double u, double v) const {
    const Complex z = to_z(u, v);
    if (!domain.contains(z)) return std::numeric_limits<double>::quiet_NaN();
    const double scale = chart == Chart::Cartesian ? 1.0 : std::exp(u);
    return metric(z) * scale;
  }

  double node_u(int i) const { return u0 + (i + 0.5) * du; }
  double node_v(int j) const { return periodic ? v0 + j * dv : v0 + (j + 0.5) * dv; }

  double segment(double ua, double va, double mua, double ub, double vb, double mub) const {
    const double len = std::hypot(ub - ua, vb - va);
    if (len == 0.0) return 0.0;
    const double mid = density(0.5 * (ua + ub), 0.5 * (va + vb));
    if (!std::isfinite(mid)) return kInf;
    return len * (mua + 4.0 * mid + mub) / 6.0;
  }

  /// Weight of the edge from node (i, j) along offset o; inf when invalid.
  double edge(int i, int j, std::size_t o, int& target) const {
    const auto [di, dj] = offsets[o];
    const int ti = i + di;
    int tj = j + dj;
    target = -1;
    if (ti < 0 || ti >= nu) return kInf;
    if (periodic) {
      tj = ((tj % nv) + nv) % nv;
    } else if (tj < 0 || tj >= nv) {
      return kInf;
    }
    const double mub = mu[ti * nv + tj];
    if (!std::isfinite(mub)) return kInf;
    target = ti * nv + tj;
    if (!weights.empty()) return weights[(static_cast<std::size_t>(i) * nv + j) * offsets.size() + o];
    return segment(node_u(i), node_v(j), mu[i * nv + j], node_u(i) + di * du, node_v(j) + dj * dv, mub);
  }

  /// Nodes within the attachment radius of z with their connection weights.
  std::vector<std::pair<int, double>> attach(Complex z) const {
    const auto [u, v] = to_chart(z);
    const double muz = density(u, v);
    const double reach = std::max(radius, 2) * std::max(du, dv);
    const int ri = static_cast<int>(std::ceil(reach / du)) + 1;
    const int rj = static_cast<int>(std::ceil(reach / dv)) + 1;
    const int ci = static_cast<int>(std::floor((u - u0) / du));
    const int cj = static_cast<int>(std::floor((v - v0) / dv));
    std::vector<std::pair<int, double>> out;
    for (int i = ci - ri; i <= ci + ri; ++i) {
      if (i < 0 || i >= nu) continue;
      for (int jj = cj - rj; jj <= cj + rj; ++jj) {
        int j = jj;
        if (periodic) {
          j = ((j % nv) + nv) % nv;
        } else if (j < 0 || j >= nv) {
          continue;
        }
        const double m = mu[i * nv + j];
        if (!std::isfinite(m)) continue;
        // Unwrapped coordinates of the node relative to z.
        const double pu = node_u(i);
        const double pv = periodic ? v0 + jj * dv : node_v(j);
        if (std::hypot(pu - u, pv - v) > reach) continue;
        const double w = segment(u, v, muz, pu, pv, m);
        if (std::isfinite(w)) out.emplace_back(i * nv + j, w);
      }
    }
    return out;
  }
};

namespace {

std::vector<std::pair<int, int>> primitive_offsets(int radius) {
  std::vector<std::pair<int, int>> out;
  for (int di = -radius; di <= radius; ++di)
    for (int dj = -radius; dj <= radius; ++dj)
      if ((di != 0 || dj != 0) && std::gcd(std::abs(di), std::abs(dj)) == 1) out.emplace_back(di, dj);
  return out;
}

}  // namespace

GeodesicGrid::GeodesicGrid(const DomainModel& domain, int grid_n, int stencil_radius,
                           const std::vector<Complex>& cover)
    : impl_(std::make_unique<Impl>(domain)) {
  if (grid_n < 100) throw Error(ErrorKind::BadParameter, "grid oracle needs grid_n >= 100");
  if (stencil_radius < 1) throw Error(ErrorKind::BadParameter, "stencil radius must be >= 1");
  for (Complex z : cover)
    if (!domain.contains(z)) throw Error(ErrorKind::OutsideDomain, "oracle point outside domain");

  Impl& g = *impl_;
  g.radius = stencil_radius;
  g.offsets = primitive_offsets(stencil_radius);

  double ymax = 0.0, xmin = kInf, xmax = -kInf;
  for (Complex z : cover) {
    ymax = std::max(ymax, z.imag());
    xmin = std::min(xmin, z.real());
    xmax = std::max(xmax, z.real());
  }
  if (cover.empty()) xmin = xmax = 0.0;

  switch (domain.kind()) {
    case DomainModel::Kind::Disk:
      g.u0 = g.v0 = -1.0;
      g.du = g.dv = 2.0;
      break;
    case DomainModel::Kind::HalfPlane: {
      if (cover.empty()) ymax = 1.0;
      const double top = 1.5 * std::hypot(ymax, 0.5 * (xmax - xmin)) + ymax;
      g.u0 = xmin - top;
      g.du = xmax - xmin + 2.0 * top;
      g.v0 = 0.0;
      g.dv = top;
      break;
    }
    case DomainModel::Kind::Strip: {
      const double h = domain.parameter();
      const double margin = 2.0 * h + 0.5 * (xmax - xmin);
      g.u0 = xmin - margin;
      g.du = xmax - xmin + 2.0 * margin;
      g.v0 = 0.0;
      g.dv = h;
      break;
    }
    case DomainModel::Kind::PuncturedDisk:
    case DomainModel::Kind::PuncturedDiskR:
    case DomainModel::Kind::Annulus: {
      g.chart = Impl::Chart::LogPolar;
      g.periodic = true;
      const double outer = domain.kind() == DomainModel::Kind::PuncturedDiskR ? domain.parameter() : 1.0;
      const double s_hi = std::log(outer);
      double s_lo;
      if (domain.kind() == DomainModel::Kind::Annulus) {
        s_lo = std::log(domain.parameter());
      } else {
        double depth = 1.0;
        for (Complex z : cover) depth = std::max(depth, std::log(outer / std::abs(z)));
        s_lo = s_hi - (1.25 * std::hypot(depth, 0.5 * kPi) + 0.5);
      }
      g.u0 = s_lo;
      g.du = s_hi - s_lo;
      g.v0 = -kPi;
      g.dv = 2.0 * kPi;
      break;
    }
  }

  // Split about grid_n^2 nodes so that cells are close to square.
  const double aspect = std::sqrt(g.du / g.dv);
  g.nu = std::max(8, static_cast<int>(std::lround(grid_n * aspect)));
  g.nv = std::max(8, static_cast<int>(std::lround(grid_n / aspect)));
  g.du /= g.nu;
  g.dv /= g.nv;

  const int nu = g.nu, nv = g.nv;
  const std::size_t nodes = static_cast<std::size_t>(nu) * nv;
  g.mu.resize(nodes);
  for (int i = 0; i < nu; ++i)
    for (int j = 0; j < nv; ++j) g.mu[i * nv + j] = g.density(g.node_u(i), g.node_v(j));

  constexpr std::size_t kMaxCachedEdges = 16'000'000;
  if (nodes * g.offsets.size() <= kMaxCachedEdges) {
    g.weights.assign(nodes * g.offsets.size(), kInf);
    for (int i = 0; i < nu; ++i) {
      for (int j = 0; j < nv; ++j) {
        if (!std::isfinite(g.mu[i * nv + j])) continue;
        for (std::size_t o = 0; o < g.offsets.size(); ++o) {
          const auto [di, dj] = g.offsets[o];
          int ti = i + di, tj = j + dj;
          if (ti < 0 || ti >= nu) continue;
          if (g.periodic) tj = ((tj % nv) + nv) % nv;
          else if (tj < 0 || tj >= nv) continue;
          const double mub = g.mu[ti * nv + tj];
          if (!std::isfinite(mub)) continue;
          g.weights[(static_cast<std::size_t>(i) * nv + j) * g.offsets.size() + o] =
              g.segment(g.node_u(i), g.node_v(j), g.mu[i * nv + j], g.node_u(i) + di * g.du,
                        g.node_v(j) + dj * g.dv, mub);
        }
      }
    }
  }
}

GeodesicGrid::~GeodesicGrid() = default;
GeodesicGrid::GeodesicGrid(GeodesicGrid&&) noexcept = default;
GeodesicGrid& GeodesicGrid::operator=(GeodesicGrid&&) noexcept = default;

DistanceResult GeodesicGrid::distance(Complex z1, Complex z2) const {
  const Impl& g = *impl_;
  if (!g.domain.contains(z1) || !g.domain.contains(z2))
    throw Error(ErrorKind::OutsideDomain, "oracle point outside domain");
  if (z1 == z2) return {0.0, DistanceMethod::GridOracle, 0};

  const int nodes = g.nu * g.nv;
  const int source = nodes;
  const int target = nodes + 1;
  std::unordered_map<int, double> into_target;
  for (auto [idx, w] : g.attach(z2)) into_target.emplace(idx, w);

  std::vector<double> dist(nodes + 2, kInf);
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> queue;
  dist[source] = 0.0;
  for (auto [idx, w] : g.attach(z1)) {
    if (w < dist[idx]) {
      dist[idx] = w;
      queue.emplace(w, idx);
    }
  }
  // Direct segment when the endpoints are close.
  {
    const auto [u1, v1] = g.to_chart(z1);
    auto [u2, v2] = g.to_chart(z2);
    if (g.periodic) v2 = v1 + std::remainder(v2 - v1, 2.0 * kPi);
    const double reach = std::max(g.radius, 2) * std::max(g.du, g.dv);
    if (std::hypot(u2 - u1, v2 - v1) <= reach) {
      const double w = g.segment(u1, v1, g.density(u1, v1), u2, v2, g.density(u2, v2));
      if (std::isfinite(w)) {
        dist[target] = w;
        queue.emplace(w, target);
      }
    }
  }

  while (!queue.empty()) {
    const auto [d, idx] = queue.top();
    queue.pop();
    if (d > dist[idx]) continue;
    if (idx == target) return {d, DistanceMethod::GridOracle, 0};
    const int i = idx / g.nv;
    const int j = idx % g.nv;
    for (std::size_t o = 0; o < g.offsets.size(); ++o) {
      int next;
      const double w = g.edge(i, j, o, next);
      if (next < 0 || !std::isfinite(w)) continue;
      const double nd = d + w;
      if (nd < dist[next]) {
        dist[next] = nd;
        queue.emplace(nd, next);
      }
    }
    if (auto it = into_target.find(idx); it != into_target.end()) {
      const double nd = d + it->second;
      if (nd < dist[target]) {
        dist[target] = nd;
        queue.emplace(nd, target);
      }
    }
  }
  throw Error(ErrorKind::OutsideDomain, "grid oracle found no path between the points");
}

DistanceResult geodesic_oracle(const DomainModel& domain, Complex z1, Complex z2, int grid_n,
                               int stencil_radius) {
  if (z1 == z2 && domain.contains(z1)) return {0.0, DistanceMethod::GridOracle, 0};
  return GeodesicGrid(domain, grid_n, stencil_radius, {z1, z2}).distance(z1, z2);
}

// ---------------------------------------------------------------------------

Lemma44Constants lemma44_constants(Complex q, double R) {
  const double m = std::abs(q);
  if (!(R > 0.0 && R <= 1.0)) throw Error(ErrorKind::BadParameter, "lemma constants need 0 < R <= 1");
  if (!(m > 0.0 && m < R)) throw Error(ErrorKind::OutsideDomain, "base point needs 0 < |q| < R");

  const double base = std::arg(q);
  auto dist_at = [&](double theta) {
    return hyperbolic_distance(DomainModel::punctured_disk(), std::polar(m, theta), q).value;
  };

  constexpr int kSweep = 720;
  int best = 0;
  double best_value = -kInf;
  for (int j = 0; j < kSweep; ++j) {
    const double d = dist_at(base + 2.0 * kPi * j / kSweep);
    if (d > best_value) {
      best_value = d;
      best = j;
    }
  }
  // Golden-section refinement on the bracketing sweep cells.
  const double step = 2.0 * kPi / kSweep;
  double lo = base + (best - 1) * step;
  double hi = base + (best + 1) * step;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - inv_phi * (hi - lo);
  double b = lo + inv_phi * (hi - lo);
  double fa = dist_at(a), fb = dist_at(b);
  while (hi - lo > 1e-8) {
    if (fa >= fb) {
      hi = b;
      b = a;
      fb = fa;
      a = hi - inv_phi * (hi - lo);
      fa = dist_at(a);
    } else {
      lo = a;
      a = b;
      fa = fb;
      b = lo + inv_phi * (hi - lo);
      fb = dist_at(b);
    }
  }
  const double theta = 0.5 * (lo + hi);
  double gamma = dist_at(theta);
  Complex farthest = std::polar(m, theta);
  if (best_value > gamma) {
    gamma = best_value;
    farthest = std::polar(m, base + best * step);
  }
  const double log_q = std::abs(std::log(m));
  return {log_q * std::exp(-2.0 * gamma), log_q + kPi, gamma, farthest};
}

double covering_decay_ratio(Complex z) {
  if (!(std::abs(z) < 1.0)) throw Error(ErrorKind::OutsideDomain, "decay ratio needs |z| < 1");
  return std::exp(-2.0 * dist_disk(z, 0.0).value) / (1.0 - std::abs(z));
}

}  // namespace hypmetric
