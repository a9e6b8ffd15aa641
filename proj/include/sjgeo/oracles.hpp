#pragma once

// Reference computations that share no formulas with the operators module:
// numerical pushforwards, the Laplace-Beltrami operator of an arbitrary
// metric tensor field, and the explicit closed forms for n = m = 1.

#include <functional>

#include "sjgeo/metrics.hpp"

namespace sjgeo {

using ChartMap = std::function<RVector(std::span<const double>)>;
using TensorField = std::function<RMatrix(std::span<const double>)>;
using ChartFunction = std::function<double(std::span<const double>)>;

/// dF_x(v) by central differences along v, extrapolated over (h, h/2).
RVector directional_derivative(const ChartMap& f, std::span<const double> x, std::span<const double> v, double h);

/// Default pushforward step: 1e-4·(1 + scale), halved once by extrapolation.
double pushforward_step(std::span<const double> x);

Tangent pushforward(const JacobiElement& g, const UpperPoint& p, const Tangent& t, double h = 0.0);
Tangent pushforward(const JacobiStarElement& g, const DiskPoint& p, const Tangent& t, double h = 0.0);
/// dM·Ω for the Sp(n,R) action on H_n.
CMatrix pushforward_siegel(const SpElement& g, const CMatrix& omega, const CMatrix& domega, double h = 0.0);
/// dφ for the G_* action on D_n.
CMatrix pushforward_gstar(const GStarElement& g, const CMatrix& w, const CMatrix& dw, double h = 0.0);
/// dΦ_p(t): disk tangent to upper tangent.
Tangent cayley_pushforward(const DiskPoint& p, const Tangent& t, double h = 0.0);

/// Δf = g^{ij}∂_i∂_j f + b^j∂_j f with b^j = |g|^{-1/2}∂_i(|g|^{1/2}g^{ij}),
/// all derivatives by plain central differences (step h for f, h/10 for the
/// tensor field).
double laplace_beltrami(const ChartFunction& f, std::span<const double> x, const TensorField& g, double h);

/// The explicit n = m = 1, A = B = 1 line element (four times ¼ds̃²).
double q_disk_n1_display(cdouble w, cdouble eta, cdouble dw, cdouble deta);

/// The explicit Δ̃_{1,1;1,1} applied to f at chart point x = (Re W, Im W,
/// Re η, Im η), with its own central-difference second derivatives.
double lap_disk_n1_display(const ChartFunction& f, std::span<const double> x, double h);

}  // namespace sjgeo
