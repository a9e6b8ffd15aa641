#include "sjgeo/geometry.hpp"

namespace sjgeo {

namespace {

const cdouble kI(0.0, 1.0);

// Möbius-type results are symmetric in exact arithmetic; drift beyond this
// means the input was not a group element or not a point.
constexpr double kActionSymmetryDefect = 1e-9;

CMatrix symmetrized_result(const CMatrix& r, const char* what) {
  if (symmetry_defect(r) > kActionSymmetryDefect * (1.0 + max_abs(r)))
    throw NumericalDefect(std::string(what) + ": result is not symmetric");
  return symmetrize(r);
}

}  // namespace

std::string to_string(Model model) { return model == Model::upper ? "upper" : "disk"; }

Model model_from_string(const std::string& s) {
  if (s == "upper") return Model::upper;
  if (s == "disk") return Model::disk;
  throw InvalidInput("unknown model '" + s + "' (expected upper or disk)");
}

double upper_margin(const CMatrix& omega) { return min_hermitian_eigenvalue(complexify(imag_part(omega))); }

double disk_margin(const CMatrix& w) {
  return min_hermitian_eigenvalue(CMatrix::identity(w.rows()) - conj(w) * w);
}

std::string upper_violation(const UpperPoint& p) {
  if (p.omega.rows() == 0 || !p.omega.square()) return "Omega must be a non-empty square matrix";
  if (p.z.cols() != p.n()) return "Z must have n columns";
  if (!all_finite(p.omega) || !all_finite(p.z)) return "entries must be finite";
  if (symmetry_defect(p.omega) > kSymmetryTol) return "Omega must be symmetric";
  if (!(upper_margin(p.omega) > kMembershipMargin)) return "Im Omega must be positive definite";
  return {};
}

std::string disk_violation(const DiskPoint& p) {
  if (p.w.rows() == 0 || !p.w.square()) return "W must be a non-empty square matrix";
  if (p.eta.cols() != p.n()) return "eta must have n columns";
  if (!all_finite(p.w) || !all_finite(p.eta)) return "entries must be finite";
  if (symmetry_defect(p.w) > kSymmetryTol) return "W must be symmetric";
  if (!(disk_margin(p.w) > kMembershipMargin)) return "I - conj(W) W must be positive definite";
  return {};
}

void require_valid(const UpperPoint& p) {
  if (auto v = upper_violation(p); !v.empty()) throw InvalidInput("invalid upper point: " + v);
}

void require_valid(const DiskPoint& p) {
  if (auto v = disk_violation(p); !v.empty()) throw InvalidInput("invalid disk point: " + v);
}

CMatrix act_siegel(const SpElement& m, const CMatrix& omega) {
  const CMatrix k = inverse(complexify(m.c) * omega + complexify(m.d));
  return symmetrized_result((complexify(m.a) * omega + complexify(m.b)) * k, "act_siegel");
}

UpperPoint act_upper(const JacobiElement& g, const UpperPoint& p) {
  const CMatrix k = inverse(complexify(g.sp.c) * p.omega + complexify(g.sp.d));
  CMatrix om = symmetrized_result((complexify(g.sp.a) * p.omega + complexify(g.sp.b)) * k, "act_upper");
  CMatrix z = (p.z + complexify(g.h.lambda) * p.omega + complexify(g.h.mu)) * k;
  return {std::move(om), std::move(z)};
}

CMatrix act_gstar(const GStarElement& g, const CMatrix& w) {
  const CMatrix k = inverse(conj(g.q) * w + conj(g.p));
  return symmetrized_result((g.p * w + g.q) * k, "act_gstar");
}

DiskPoint act_disk(const JacobiStarElement& g, const DiskPoint& p) {
  const CMatrix k = inverse(conj(g.g.q) * p.w + conj(g.g.p));
  CMatrix w = symmetrized_result((g.g.p * p.w + g.g.q) * k, "act_disk");
  CMatrix eta = (p.eta + g.xi * p.w + conj(g.xi)) * k;
  return {std::move(w), std::move(eta)};
}

UpperPoint cayley(const DiskPoint& p) {
  const std::size_t n = p.n();
  const CMatrix id = CMatrix::identity(n);
  const CMatrix k = inverse(id - p.w);
  CMatrix om = symmetrized_result((id + p.w) * k * kI, "cayley");
  return {std::move(om), p.eta * k * cdouble(0.0, 2.0)};
}

DiskPoint cayley_inv(const UpperPoint& p) {
  const CMatrix iI = CMatrix::identity(p.n()) * kI;
  const CMatrix k = inverse(p.omega + iI);
  CMatrix w = symmetrized_result((p.omega - iI) * k, "cayley_inv");
  return {std::move(w), p.z * k};
}

double check_cayley_compat(const JacobiElement& g, const DiskPoint& p) {
  const UpperPoint lhs = act_upper(g, cayley(p));
  const UpperPoint rhs = cayley(act_disk(theta_map(g), p));
  return std::max(max_abs_diff(lhs.omega, rhs.omega), max_abs_diff(lhs.z, rhs.z));
}

DiskPoint hc_pplus_component(const JacobiStarElement& g, const DiskPoint& p) {
  const std::size_t n = p.n(), m = p.m();
  const ComplexJacobiElement x{CMatrix::identity(n), p.w, CMatrix(n, n), CMatrix::identity(n),
                               {CMatrix(m, n), p.eta, CMatrix(m, m)}};
  const ComplexJacobiElement t = complex_jacobi_mul(as_complex(g), x);
  // t = p⁺·k·p⁻ with p⁺ = ((I, QS⁻¹; 0, I), (0, η'; 0)); the lower factors
  // carry no η-component, so η' = η_t S⁻¹.
  const CMatrix si = inverse(t.s);
  CMatrix w = symmetrized_result(t.q * si, "hc_pplus_component");
  return {std::move(w), t.h.eta * si};
}

RMatrix y_from_disk(const DiskPoint& p) {
  const CMatrix id = CMatrix::identity(p.n());
  const CMatrix r = inverse(id - p.w) * (id - p.w * conj(p.w)) * inverse(id - conj(p.w));
  return real_part(r);
}

RMatrix v_from_disk(const DiskPoint& p) {
  const CMatrix id = CMatrix::identity(p.n());
  const CMatrix r = p.eta * inverse(id - p.w) + conj(p.eta) * inverse(id - conj(p.w));
  return real_part(r);
}

CMatrix cayley_d_omega(const DiskPoint& p, const CMatrix& dw) {
  const CMatrix k = inverse(CMatrix::identity(p.n()) - p.w);
  return k * dw * k * cdouble(0.0, 2.0);
}

CMatrix cayley_d_z(const DiskPoint& p, const CMatrix& dw, const CMatrix& deta) {
  const CMatrix k = inverse(CMatrix::identity(p.n()) - p.w);
  return (deta + p.eta * k * dw) * k * cdouble(0.0, 2.0);
}

DiskPoint random_disk_point(std::size_t n, std::size_t m, Rng& rng) {
  const CMatrix s = rng.complex_symmetric(n, -1.0, 1.0);
  // The Frobenius norm bounds the spectral norm, so ‖W‖₂ ≤ 0.45.
  CMatrix w = s * cdouble(0.45 / std::max(1.0, frobenius_norm(s)));
  return {std::move(w), rng.complex_matrix(m, n, -2.0, 2.0)};
}

DiskPoint random_disk_point(std::size_t n, std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  return random_disk_point(n, m, rng);
}

UpperPoint random_upper_point(std::size_t n, std::size_t m, Rng& rng) { return cayley(random_disk_point(n, m, rng)); }

UpperPoint random_upper_point(std::size_t n, std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  return random_upper_point(n, m, rng);
}

}  // namespace sjgeo
