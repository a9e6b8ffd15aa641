#pragma once

// Points of H_{n,m} and D_{n,m}, the group actions on them and the partial
// Cayley transform between the two models.

#include <cstdint>
#include <string>

#include "sjgeo/cmatrix.hpp"
#include "sjgeo/groups.hpp"

namespace sjgeo {

enum class Model { upper, disk };

std::string to_string(Model model);
Model model_from_string(const std::string& s);

/// (Ω, Z) with Ω symmetric n×n, Im Ω > 0 and Z complex m×n.
struct UpperPoint {
  CMatrix omega;
  CMatrix z;

  std::size_t n() const { return omega.rows(); }
  std::size_t m() const { return z.rows(); }
  RMatrix y() const { return imag_part(omega); }
  RMatrix v() const { return imag_part(z); }
};

/// (W, η) with W symmetric n×n, I − W̄W > 0 and η complex m×n.
struct DiskPoint {
  CMatrix w;
  CMatrix eta;

  std::size_t n() const { return w.rows(); }
  std::size_t m() const { return eta.rows(); }
};

inline constexpr double kSymmetryTol = 1e-12;
inline constexpr double kMembershipMargin = 1e-9;

/// Smallest eigenvalue of Im Ω.
double upper_margin(const CMatrix& omega);
/// Smallest eigenvalue of I − W̄W.
double disk_margin(const CMatrix& w);

/// Empty string when the point is valid, otherwise the violated invariant.
std::string upper_violation(const UpperPoint& p);
std::string disk_violation(const DiskPoint& p);
/// Throw InvalidInput naming the violated invariant.
void require_valid(const UpperPoint& p);
void require_valid(const DiskPoint& p);

/// (AΩ + B)(CΩ + D)⁻¹.
CMatrix act_siegel(const SpElement& m, const CMatrix& omega);
/// (M·Ω, (Z + λΩ + μ)(CΩ + D)⁻¹).
UpperPoint act_upper(const JacobiElement& g, const UpperPoint& p);
/// (PW + Q)(Q̄W + P̄)⁻¹.
CMatrix act_gstar(const GStarElement& g, const CMatrix& w);
/// ((PW + Q)(Q̄W + P̄)⁻¹, (η + ξW + ξ̄)(Q̄W + P̄)⁻¹).
DiskPoint act_disk(const JacobiStarElement& g, const DiskPoint& p);

/// Φ(W, η) = (i(I + W)(I − W)⁻¹, 2iη(I − W)⁻¹).
UpperPoint cayley(const DiskPoint& p);
/// Φ⁻¹(Ω, Z) = ((Ω − iI)(Ω + iI)⁻¹, Z(Ω + iI)⁻¹).
DiskPoint cayley_inv(const UpperPoint& p);

/// max-norm of g·Φ(p) − Φ(Θ(g)·p).
double check_cayley_compat(const JacobiElement& g, const DiskPoint& p);

/// Bounded-model action recomputed through the semidirect product
/// SL(2n,C) ⋉ H_C: multiply g by ((I, W; 0, I), (0, η; 0)) and read off the
/// P⁺-component of the Harish-Chandra decomposition.
DiskPoint hc_pplus_component(const JacobiStarElement& g, const DiskPoint& p);

/// Y = (I − W)⁻¹(I − WW̄)(I − W̄)⁻¹.
RMatrix y_from_disk(const DiskPoint& p);
/// V = η(I − W)⁻¹ + η̄(I − W̄)⁻¹.
RMatrix v_from_disk(const DiskPoint& p);
/// dΩ = 2i(I − W)⁻¹ dW (I − W)⁻¹.
CMatrix cayley_d_omega(const DiskPoint& p, const CMatrix& dw);
/// dZ = 2i{dη + η(I − W)⁻¹dW}(I − W)⁻¹.
CMatrix cayley_d_z(const DiskPoint& p, const CMatrix& dw, const CMatrix& deta);

/// W = 0.45·S/max(1, ‖S‖_F) for a random complex symmetric S with
/// U(−1,1) parts; η with U(−2,2) parts. The disk margin is at least
/// 1 − 0.45² ≈ 0.8.
DiskPoint random_disk_point(std::size_t n, std::size_t m, Rng& rng);
DiskPoint random_disk_point(std::size_t n, std::size_t m, std::uint64_t seed);
/// Φ of a random disk point.
UpperPoint random_upper_point(std::size_t n, std::size_t m, Rng& rng);
UpperPoint random_upper_point(std::size_t n, std::size_t m, std::uint64_t seed);

}  // namespace sjgeo
