#include "sjgeo/chart.hpp"

#include <algorithm>
#include <cmath>

namespace sjgeo {

std::vector<std::pair<std::size_t, std::size_t>> symmetric_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(n * (n + 1) / 2);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) out.emplace_back(a, b);
  return out;
}

RVector to_chart(const CMatrix& sym, const CMatrix& vec) {
  if (!sym.square() || vec.cols() != sym.rows()) throw ShapeMismatch("to_chart: shapes do not conform");
  const ChartLayout layout{sym.rows(), vec.rows()};
  RVector x(layout.dim());
  const auto pairs = symmetric_pairs(layout.n);
  const std::size_t k = pairs.size();
  for (std::size_t i = 0; i < k; ++i) {
    const cdouble v = sym(pairs[i].first, pairs[i].second);
    x[i] = v.real();
    x[k + i] = v.imag();
  }
  const std::size_t mn = vec.size();
  for (std::size_t j = 0; j < mn; ++j) {
    x[2 * k + j] = vec.data()[j].real();
    x[2 * k + mn + j] = vec.data()[j].imag();
  }
  return x;
}

void from_chart(const ChartLayout& layout, std::span<const double> x, CMatrix& sym, CMatrix& vec) {
  if (x.size() != layout.dim()) throw ShapeMismatch("from_chart: coordinate vector has the wrong dimension");
  const auto pairs = symmetric_pairs(layout.n);
  const std::size_t k = pairs.size();
  sym = CMatrix(layout.n, layout.n);
  for (std::size_t i = 0; i < k; ++i) {
    const cdouble v(x[i], x[k + i]);
    sym(pairs[i].first, pairs[i].second) = v;
    sym(pairs[i].second, pairs[i].first) = v;
  }
  vec = CMatrix(layout.m, layout.n);
  const std::size_t mn = vec.size();
  for (std::size_t j = 0; j < mn; ++j) vec.data()[j] = cdouble(x[2 * k + j], x[2 * k + mn + j]);
}

double chart_scale(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s = std::max(s, std::abs(v));
  return s;
}

}  // namespace sjgeo
