#pragma once

#include <cstdint>
#include <vector>

#include "hypmetric/error.hpp"

namespace hypmetric {

/// Counter-based SplitMix64 stream. The n-th draw depends only on (seed, n),
/// so reports are reproducible across platforms and standard libraries.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

/// Points with modulus uniform in [rmin, rmax] and argument uniform in [-pi, pi).
std::vector<Complex> random_polar_points(std::uint64_t seed, std::size_t n, double rmin, double rmax);

/// n x n cell-centred grid over [-extent, extent]^2 keeping |z| < extent.
std::vector<Complex> disk_grid(std::size_t n, double extent);

/// Moduli geometric in [rmin, rmax] (nr of them) times ntheta equally spaced
/// arguments. Ordered by radius, then angle.
std::vector<Complex> polar_grid(double rmin, double rmax, std::size_t nr, std::size_t ntheta);

std::vector<double> log_spaced(double lo, double hi, std::size_t n);

}  // namespace hypmetric
