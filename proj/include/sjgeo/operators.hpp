#pragma once

// The invariant second-order operators on H_n, H_{n,m}, D_n and D_{n,m}.
//
// Every operator here is a trace contraction of first-order matrix operators
// whose coefficients are frozen at the evaluation point (nothing is
// differentiated but the field). Each is built as a SecondOrderSymbol and
// applied to a finite-difference Hessian of the field.
//
// For n ≥ 2 the expanded-bracket formulas for the H_{n,m} and D_{n,m}
// Laplacians, read literally, lose a symmetrization and are not the
// Laplace-Beltrami operators of the invariant metrics. Transcription selects
// the corrected operator (the default) or the literal reading ("printed").
// The two coincide for n = 1.

#include <string>

#include "sjgeo/metrics.hpp"
#include "sjgeo/symbol.hpp"
#include "sjgeo/wirtinger.hpp"

namespace sjgeo {

enum class Transcription { laplace_beltrami, printed };

enum class OperatorKind {
  siegel,  // 4σ(Y ᵗ(Y∂Ω̄)∂Ω) on H_n
  upper,   // Laplacian of the invariant metric on H_{n,m}
  disk_n,  // σ((I − WW̄) ᵗ((I − WW̄)∂W̄)∂W) on D_n
  disk,    // Laplacian of the invariant metric on D_{n,m}
  D,       // σ(Y∂Z ᵗ∂Z̄)
  L,       // ¼Δ_{n,m;1,1} − D
  Dtilde,  // σ((I − W̄W)∂η ᵗ∂η̄)
  Ltilde,  // Δ̃_{n,m;1,1} − D̃
};

std::string to_string(OperatorKind kind);
OperatorKind operator_kind_from_string(const std::string& s);
Model operator_model(OperatorKind kind);
/// siegel and disk_n act on the matrix variable only (chart with m = 0).
ChartLayout operator_layout(OperatorKind kind, std::size_t n, std::size_t m);

/// The operator's symbol frozen at chart point x.
SecondOrderSymbol operator_symbol(OperatorKind kind, const ChartLayout& layout, std::span<const double> x,
                                  const MetricParams& params = {},
                                  Transcription transcription = Transcription::laplace_beltrami);

/// Σ F_st H_st with H the Wirtinger Hessian derived from the real Hessian.
cdouble apply_symbol(const SecondOrderSymbol& s, const ChartLayout& layout, const RMatrix& real_hessian);

/// Operator applied to f at x. Steps default to second_step(x); refuses
/// points whose margin is below 4h.
double apply_operator(OperatorKind kind, const ScalarField& f, std::span<const double> x,
                      const MetricParams& params = {},
                      Transcription transcription = Transcription::laplace_beltrami, double h = 0.0);

double lap_siegel(const ScalarField& f, const CMatrix& omega);
double lap_upper(const ScalarField& f, const UpperPoint& p, const MetricParams& params,
                 Transcription transcription = Transcription::laplace_beltrami);
double lap_disk_n(const ScalarField& f, const CMatrix& w);
double lap_disk(const ScalarField& f, const DiskPoint& p, const MetricParams& params,
                Transcription transcription = Transcription::laplace_beltrami);
double op_invariant(OperatorKind kind, const ScalarField& f, std::span<const double> x,
                    Transcription transcription = Transcription::laplace_beltrami);

}  // namespace sjgeo
