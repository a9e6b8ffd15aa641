#pragma once

// The canonical real chart ("canonical-v1"): x_{μν} (μ ≤ ν, lexicographic),
// y_{μν}, u_{kl} (row-major), v_{kl} for the upper model, and Re w, Im w,
// Re η, Im η in the same order for the disk model.

#include <span>
#include <utility>
#include <vector>

#include "sjgeo/cmatrix.hpp"

namespace sjgeo {

inline constexpr const char* kChartOrdering = "canonical-v1";

using RVector = std::vector<double>;

struct ChartLayout {
  std::size_t n = 1;
  std::size_t m = 1;

  std::size_t pairs() const { return n * (n + 1) / 2; }
  /// Number of complex coordinates N; complex coordinate c < pairs() is the
  /// symmetric entry (μ, ν), otherwise the vector entry (k, l), row-major.
  std::size_t complex_dim() const { return pairs() + m * n; }
  std::size_t dim() const { return 2 * complex_dim(); }
  std::size_t re_index(std::size_t c) const { return c < pairs() ? c : pairs() + c; }
  std::size_t im_index(std::size_t c) const { return c < pairs() ? pairs() + c : pairs() + m * n + c; }
};

/// Index pairs (μ, ν), μ ≤ ν, in lexicographic order.
std::vector<std::pair<std::size_t, std::size_t>> symmetric_pairs(std::size_t n);

/// Flatten a symmetric n×n matrix and an m×n matrix into chart coordinates.
RVector to_chart(const CMatrix& sym, const CMatrix& vec);

/// Inverse of to_chart; off-diagonal coordinates fill both symmetric slots.
void from_chart(const ChartLayout& layout, std::span<const double> x, CMatrix& sym, CMatrix& vec);

/// Max |x_i|, used to scale finite-difference steps.
double chart_scale(std::span<const double> x);

}  // namespace sjgeo
