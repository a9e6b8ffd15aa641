#pragma once

// Heisenberg, symplectic and Jacobi groups in both models, together with
// the comparison maps between them (the T_* conjugation, the map Θ and the
// embedding of G^J into Sp(m+n, R)).

#include <cstdint>

#include "sjgeo/cmatrix.hpp"
#include "sjgeo/random.hpp"

namespace sjgeo {

/// (λ, μ; κ) with λ, μ real m×n and κ real m×m; κ + μ·ᵗλ is symmetric.
struct HeisenbergElement {
  RMatrix lambda;
  RMatrix mu;
  RMatrix kappa;
};

/// M = [[A, B], [C, D]] with ᵗM J M = J.
struct SpElement {
  RMatrix a, b, c, d;

  std::size_t n() const { return a.rows(); }
  RMatrix matrix() const;
  static SpElement from_matrix(const RMatrix& m);
};

struct JacobiElement {
  SpElement sp;
  HeisenbergElement h;

  std::size_t n() const { return sp.n(); }
  std::size_t m() const { return h.lambda.rows(); }
};

/// [[P, Q], [Q̄, P̄]] in SU(n,n) ∩ Sp(n,C).
struct GStarElement {
  CMatrix p, q;

  std::size_t n() const { return p.rows(); }
  CMatrix matrix() const;
};

/// (g, (ξ, ξ̄; iκ)). The stored kappa is the real matrix κ of the disk-model
/// central part iκ; Θ produces κ = −κ_upper/2.
struct JacobiStarElement {
  GStarElement g;
  CMatrix xi;
  RMatrix kappa;

  std::size_t n() const { return g.n(); }
  std::size_t m() const { return xi.rows(); }
};

/// (ξ, η; ζ) with ζ + η·ᵗξ symmetric.
struct ComplexHeisenbergElement {
  CMatrix xi, eta, zeta;
};

/// An element of SL(2n,C) ⋉ H_C^{(n,m)}: ([[P,Q],[R,S]], (ξ, η; ζ)).
struct ComplexJacobiElement {
  CMatrix p, q, r, s;
  ComplexHeisenbergElement h;
};

RMatrix j_matrix(std::size_t n);

HeisenbergElement heisenberg_identity(std::size_t n, std::size_t m);
HeisenbergElement heisenberg_mul(const HeisenbergElement& x, const HeisenbergElement& y);
HeisenbergElement heisenberg_inverse(const HeisenbergElement& x);
/// ‖(κ + μᵗλ) − ᵗ(κ + μᵗλ)‖_max.
double heisenberg_defect(const HeisenbergElement& x);

SpElement sp_identity(std::size_t n);
SpElement sp_mul(const SpElement& x, const SpElement& y);
SpElement sp_inverse(const SpElement& x);
/// ‖ᵗM J M − J‖_max.
double symplectic_defect(const SpElement& x);

JacobiElement jacobi_identity(std::size_t n, std::size_t m);
JacobiElement jacobi_mul(const JacobiElement& g1, const JacobiElement& g2);
JacobiElement jacobi_inverse(const JacobiElement& g);
double jacobi_defect(const JacobiElement& g);

GStarElement gstar_identity(std::size_t n);
GStarElement gstar_mul(const GStarElement& x, const GStarElement& y);
GStarElement gstar_inverse(const GStarElement& x);
/// Membership defect: T g T⁻¹ must be real and symplectic.
double gstar_defect(const GStarElement& x);

JacobiStarElement jacobistar_identity(std::size_t n, std::size_t m);
JacobiStarElement jacobistar_mul(const JacobiStarElement& g1, const JacobiStarElement& g2);
JacobiStarElement jacobistar_inverse(const JacobiStarElement& g);
/// Max of the G_* defect and the antisymmetric part of κ − Im(ξ ᵗξ̄),
/// which is the image of the Heisenberg symmetry condition under Θ.
double jacobistar_defect(const JacobiStarElement& g);

ComplexHeisenbergElement complex_heisenberg_mul(const ComplexHeisenbergElement& x,
                                                const ComplexHeisenbergElement& y);
ComplexJacobiElement complex_jacobi_mul(const ComplexJacobiElement& x, const ComplexJacobiElement& y);
ComplexJacobiElement as_complex(const JacobiStarElement& g);

JacobiStarElement theta_map(const JacobiElement& g);

/// The 2(m+n) × 2(m+n) real symplectic matrix representing g.
RMatrix embed_sp(const JacobiElement& g);

/// T_* = (1/√2)[[I_k, I_k], [iI_k, −iI_k]].
CMatrix tstar(std::size_t k);
CMatrix tstar_inverse(std::size_t k);
/// T_*⁻¹ · e · T_* for a real 2k × 2k matrix e.
CMatrix tstar_conjugate(const RMatrix& e);
/// [[P_*, Q_*], [Q̄_*, P̄_*]] assembled from the disk-model parameters.
CMatrix star_block_form(const JacobiStarElement& g);

SpElement random_sp(std::size_t n, Rng& rng);
HeisenbergElement random_heisenberg(std::size_t n, std::size_t m, Rng& rng);
JacobiElement random_jacobi(std::size_t n, std::size_t m, Rng& rng);
JacobiElement random_jacobi(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace sjgeo
