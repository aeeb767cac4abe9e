#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <vector>

namespace carleman {

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'c0de'2024'0601ULL;

// SplitMix64 with explicit split(). Distributions are implemented here rather
// than taken from <random> because the standard leaves their algorithms
// unspecified, and reports must be byte-stable across toolchains.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed = kDefaultSeed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Independent stream derived from the next output.
  SplitMix64 split() { return SplitMix64(next() ^ 0x6a09e667f3bcc909ULL); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  int uniform_int(int lo, int hi_inclusive) {
    const auto span = static_cast<std::uint64_t>(hi_inclusive - lo) + 1;
    return lo + static_cast<int>(next() % span);
  }

  // Standard normal via Box-Muller (one value per call).
  double normal() {
    double u = uniform();
    while (u <= 0.0) u = uniform();
    const double v = uniform();
    return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * 3.141592653589793 * v);
  }

  // Uniform direction on S^{dim-1}.
  std::vector<double> unit_vector(int dim) {
    std::vector<double> v(dim);
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (double& c : v) {
        c = normal();
        norm2 += c * c;
      }
    } while (norm2 < 1e-24);
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& c : v) c *= inv;
    return v;
  }

  // Uniform point in the open ball of the given radius around the origin.
  std::vector<double> in_ball(int dim, double radius = 1.0) {
    std::vector<double> v = unit_vector(dim);
    const double r = radius * std::pow(uniform(), 1.0 / dim);
    for (double& c : v) c *= r;
    return v;
  }

 private:
  std::uint64_t state_;
};

}  // namespace carleman
