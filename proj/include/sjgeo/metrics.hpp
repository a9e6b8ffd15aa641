#pragma once

// Line elements of H_n, H_{n,m}, D_n and D_{n,m}, evaluated on tangent
// vectors, and their realization as real metric tensors in the canonical chart.

#include <functional>
#include <string>

#include "sjgeo/chart.hpp"
#include "sjgeo/geometry.hpp"

namespace sjgeo {

/// (dΩ, dZ) or (dW, dη); dmat symmetric n×n, dvec m×n.
struct Tangent {
  Model model = Model::upper;
  CMatrix dmat;
  CMatrix dvec;
};

std::string tangent_violation(const Tangent& t, std::size_t n, std::size_t m);
RVector tangent_to_chart(const Tangent& t);
Tangent tangent_from_chart(Model model, const ChartLayout& layout, std::span<const double> v);

struct MetricParams {
  double a = 1.0;
  double b = 1.0;
};

void require_valid(const MetricParams& params);

struct MetricTensor {
  std::size_t dim = 0;
  RMatrix g;
  std::string ordering = kChartOrdering;
};

/// σ(Y⁻¹dΩ Y⁻¹dΩ̄).
double q_siegel(const CMatrix& omega, const CMatrix& domega);

/// The invariant metric on H_{n,m}:
/// A σ(Y⁻¹dΩY⁻¹dΩ̄) + B{σ(Y⁻¹ᵗVVY⁻¹dΩY⁻¹dΩ̄) + σ(Y⁻¹ᵗdZ dZ̄)
///                       − σ(VY⁻¹dΩY⁻¹ᵗdZ̄) − σ(VY⁻¹dΩ̄Y⁻¹ᵗdZ)}.
double q_upper(const UpperPoint& p, const Tangent& t, const MetricParams& params);
cdouble q_upper_complex(const UpperPoint& p, const Tangent& t, const MetricParams& params);

/// 4σ((I − WW̄)⁻¹dW(I − W̄W)⁻¹dW̄).
double q_disk_n(const CMatrix& w, const CMatrix& dw);

/// The invariant metric on D_{n,m}, written out term by term (the 4A term
/// and the nine 4B terms).
double q_disk(const DiskPoint& p, const Tangent& t, const MetricParams& params);
cdouble q_disk_complex(const DiskPoint& p, const Tangent& t, const MetricParams& params);

/// The same metric in frame form: 4Aσ(K₁⁻¹dWK₂⁻¹dW̄) + 4Bσ(K₁⁻¹ᵗθθ̄) with
/// K₁ = I − WW̄, K₂ = I − W̄W and θ = dη + (ηW̄ − η̄)K₁⁻¹dW.
double q_disk_frame(const DiskPoint& p, const Tangent& t, const MetricParams& params);

enum class MetricKind { siegel, upper, disk_n, disk };

std::string to_string(MetricKind kind);
/// The chart a metric lives on: siegel and disk_n use only the matrix block.
ChartLayout metric_layout(MetricKind kind, std::size_t n, std::size_t m);

/// Q at chart point x applied to chart tangent v.
double metric_form(MetricKind kind, const ChartLayout& layout, std::span<const double> x,
                   std::span<const double> v, const MetricParams& params);

/// G_ij = ¼(Q(e_i + e_j) − Q(e_i − e_j)).
RMatrix polarize(std::size_t dim, const std::function<double(std::span<const double>)>& q);

MetricTensor metric_tensor(MetricKind kind, const ChartLayout& layout, std::span<const double> x,
                           const MetricParams& params);
MetricTensor metric_tensor(const UpperPoint& p, const MetricParams& params);
MetricTensor metric_tensor(const DiskPoint& p, const MetricParams& params);

}  // namespace sjgeo
