#pragma once

#include <cstdint>
#include <random>

#include "sjgeo/cmatrix.hpp"

namespace sjgeo {

/// splitmix64 finalizer; per-sample seeds are derive_seed(master, index).
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [lo, hi). Built from the raw 64-bit stream so that results do
  /// not depend on the standard library's distribution implementation.
  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  std::uint64_t next() { return engine_(); }
  int index(int count) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(count)); }

  RMatrix real_matrix(std::size_t r, std::size_t c, double lo, double hi);
  RMatrix real_symmetric(std::size_t n, double lo, double hi);
  CMatrix complex_matrix(std::size_t r, std::size_t c, double lo, double hi);
  CMatrix complex_symmetric(std::size_t n, double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

}  // namespace sjgeo
