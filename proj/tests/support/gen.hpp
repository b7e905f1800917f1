#pragma once
// Seeded generators for property tests.

#include <cmath>
#include <cstdint>
#include <random>
#include <utility>

#include "exwave/vec3.hpp"

namespace gen {

inline constexpr std::uint64_t kSeed = 0x5eed2024u;

class Gen {
 public:
  explicit Gen(std::uint64_t seed = kSeed) : rng_(seed) {}

  double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  exwave::Vec3 unit_vector() {
    std::normal_distribution<double> n(0.0, 1.0);
    for (;;) {
      const exwave::Vec3 v{n(rng_), n(rng_), n(rng_)};
      const double len = exwave::norm(v);
      if (len > 1e-3) return v / len;
    }
  }

  /// Orthonormal (propagation, transversal) pair.
  std::pair<exwave::Vec3, exwave::Vec3> frame() {
    const exwave::Vec3 a = unit_vector();
    for (;;) {
      const exwave::Vec3 b = unit_vector();
      const exwave::Vec3 t = b - a * exwave::dot(a, b);
      const double len = exwave::norm(t);
      if (len > 1e-3) return {a, t / len};
    }
  }

 private:
  std::mt19937_64 rng_;
};

}  // namespace gen
