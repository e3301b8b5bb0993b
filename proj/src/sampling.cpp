#include "hypmetric/sampling.hpp"

#include <cmath>
#include <numbers>

namespace hypmetric {

std::uint64_t SampleStream::next_u64() {
  std::uint64_t x = seed_ + 0x9E3779B97F4A7C15ULL * ++counter_;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

double SampleStream::uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

std::vector<Complex> random_polar_points(std::uint64_t seed, std::size_t n, double rmin,
                                         double rmax) {
  SampleStream stream(seed);
  std::vector<Complex> points;
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double m = stream.uniform(rmin, rmax);
    const double a = stream.uniform(-std::numbers::pi, std::numbers::pi);
    points.push_back(std::polar(m, a));
  }
  return points;
}

std::vector<Complex> disk_grid(std::size_t n, double extent) {
  std::vector<Complex> points;
  const double step = 2.0 * extent / static_cast<double>(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Complex z{-extent + (i + 0.5) * step, -extent + (j + 0.5) * step};
      if (std::abs(z) < extent) points.push_back(z);
    }
  }
  return points;
}

std::vector<double> log_spaced(double lo, double hi, std::size_t n) {
  std::vector<double> out;
  if (n == 1) return {lo};
  const double a = std::log(lo);
  const double b = std::log(hi);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1)));
  return out;
}

std::vector<Complex> polar_grid(double rmin, double rmax, std::size_t nr, std::size_t ntheta) {
  std::vector<Complex> points;
  for (double m : log_spaced(rmin, rmax, nr)) {
    for (std::size_t j = 0; j < ntheta; ++j) {
      const double a = -std::numbers::pi + 2.0 * std::numbers::pi * (j + 0.5) / ntheta;
      points.push_back(std::polar(m, a));
    }
  }
  return points;
}

}  // namespace hypmetric
