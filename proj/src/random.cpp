#include "sjgeo/random.hpp"

namespace sjgeo {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

RMatrix Rng::real_matrix(std::size_t r, std::size_t c, double lo, double hi) {
  RMatrix out(r, c);
  for (auto& x : out.data()) x = uniform(lo, hi);
  return out;
}

RMatrix Rng::real_symmetric(std::size_t n, double lo, double hi) {
  RMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) out(i, j) = out(j, i) = uniform(lo, hi);
  return out;
}

CMatrix Rng::complex_matrix(std::size_t r, std::size_t c, double lo, double hi) {
  CMatrix out(r, c);
  for (auto& x : out.data()) {
    const double re = uniform(lo, hi);
    x = cdouble(re, uniform(lo, hi));
  }
  return out;
}

CMatrix Rng::complex_symmetric(std::size_t n, double lo, double hi) {
  CMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double re = uniform(lo, hi);
      out(i, j) = out(j, i) = cdouble(re, uniform(lo, hi));
    }
  return out;
}

}  // namespace sjgeo
