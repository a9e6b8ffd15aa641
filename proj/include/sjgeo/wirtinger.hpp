#pragma once

// Finite-difference Wirtinger calculus in the canonical chart.

#include "sjgeo/fields.hpp"

namespace sjgeo {

/// ∂f/∂Ω, ∂f/∂Ω̄ (weighted, n×n) and ∂f/∂Z, ∂f/∂Z̄ (n×m, entry (l,k) is
/// ∂f/∂z_{kl}); the disk model reads W for Ω and η for Z.
struct DerivativeBundle {
  CMatrix d_mat;
  CMatrix d_mat_bar;
  CMatrix d_vec;
  CMatrix d_vec_bar;
};

/// h₁ = 1e-5·(1 + scale) for first derivatives.
double first_step(std::span<const double> x);
/// h₂ = 1e-4·(1 + scale) for second derivatives.
double second_step(std::span<const double> x);

/// Distance-to-boundary proxy: smallest eigenvalue of Im Ω or I − W̄W.
double chart_margin(Model model, const ChartLayout& layout, std::span<const double> x);
/// Throw DomainMargin when chart_margin < required.
void require_margin(Model model, const ChartLayout& layout, std::span<const double> x, double required);

/// Central-difference gradient; with `richardson` the steps h and h/2 are
/// combined to cancel the O(h²) term.
RVector fd_gradient(const ScalarField& f, std::span<const double> x, double h, bool richardson);

/// Real Hessian from the four-point mixed stencil, extrapolated over (h, h/2).
RMatrix fd_hessian(const ScalarField& f, std::span<const double> x, double h);

DerivativeBundle wirtinger_bundle(const ScalarField& f, std::span<const double> x, double h, bool richardson = false);

/// The bundle assembled from a real gradient.
DerivativeBundle bundle_from_gradient(const ChartLayout& layout, const RVector& grad);

}  // namespace sjgeo
