#include "sjgeo/groups.hpp"

#include <cmath>

namespace sjgeo {

namespace {

RMatrix antisym_part(const RMatrix& a) {
  RMatrix out = a - transpose(a);
  return out *= 0.5;
}

void require(bool ok, const char* what) {
  if (!ok) throw ShapeMismatch(what);
}

}  // namespace

RMatrix SpElement::matrix() const {
  const std::size_t k = n();
  RMatrix m(2 * k, 2 * k);
  m.set_block(0, 0, a);
  m.set_block(0, k, b);
  m.set_block(k, 0, c);
  m.set_block(k, k, d);
  return m;
}

SpElement SpElement::from_matrix(const RMatrix& m) {
  require(m.square() && m.rows() % 2 == 0, "SpElement: matrix must be 2n x 2n");
  const std::size_t k = m.rows() / 2;
  return {m.block(0, 0, k, k), m.block(0, k, k, k), m.block(k, 0, k, k), m.block(k, k, k, k)};
}

CMatrix GStarElement::matrix() const {
  const std::size_t k = n();
  CMatrix m(2 * k, 2 * k);
  m.set_block(0, 0, p);
  m.set_block(0, k, q);
  m.set_block(k, 0, conj(q));
  m.set_block(k, k, conj(p));
  return m;
}

RMatrix j_matrix(std::size_t n) {
  RMatrix j(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    j(i, n + i) = 1.0;
    j(n + i, i) = -1.0;
  }
  return j;
}

// ---- Heisenberg group

HeisenbergElement heisenberg_identity(std::size_t n, std::size_t m) {
  return {RMatrix(m, n), RMatrix(m, n), RMatrix(m, m)};
}

HeisenbergElement heisenberg_mul(const HeisenbergElement& x, const HeisenbergElement& y) {
  require(x.lambda.same_shape(y.lambda), "heisenberg_mul: shapes differ");
  return {x.lambda + y.lambda, x.mu + y.mu,
          x.kappa + y.kappa + x.lambda * transpose(y.mu) - x.mu * transpose(y.lambda)};
}

HeisenbergElement heisenberg_inverse(const HeisenbergElement& x) {
  return {-x.lambda, -x.mu, -x.kappa + x.lambda * transpose(x.mu) - x.mu * transpose(x.lambda)};
}

double heisenberg_defect(const HeisenbergElement& x) {
  return symmetry_defect(x.kappa + x.mu * transpose(x.lambda));
}

// ---- Sp(n, R)

SpElement sp_identity(std::size_t n) {
  return {RMatrix::identity(n), RMatrix(n, n), RMatrix(n, n), RMatrix::identity(n)};
}

SpElement sp_mul(const SpElement& x, const SpElement& y) {
  require(x.n() == y.n(), "sp_mul: degrees differ");
  return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
}

SpElement sp_inverse(const SpElement& x) {
  return {transpose(x.d), -transpose(x.b), -transpose(x.c), transpose(x.a)};
}

double symplectic_defect(const SpElement& x) {
  const RMatrix m = x.matrix();
  const RMatrix j = j_matrix(x.n());
  return max_abs_diff(transpose(m) * j * m, j);
}

// ---- G^J

JacobiElement jacobi_identity(std::size_t n, std::size_t m) { return {sp_identity(n), heisenberg_identity(n, m)}; }

JacobiElement jacobi_mul(const JacobiElement& g1, const JacobiElement& g2) {
  require(g1.n() == g2.n() && g1.m() == g2.m(), "jacobi_mul: (n, m) differ");
  const auto& h = g1.h;
  const auto& h2 = g2.h;
  // (λ̃, μ̃) = (λ, μ) M'
  const RMatrix lt = h.lambda * g2.sp.a + h.mu * g2.sp.c;
  const RMatrix mt = h.lambda * g2.sp.b + h.mu * g2.sp.d;
  HeisenbergElement out{lt + h2.lambda, mt + h2.mu,
                        h.kappa + h2.kappa + lt * transpose(h2.mu) - mt * transpose(h2.lambda)};
  return {sp_mul(g1.sp, g2.sp), std::move(out)};
}

JacobiElement jacobi_inverse(const JacobiElement& g) {
  const SpElement mi = sp_inverse(g.sp);
  const RMatrix lt = g.h.lambda * mi.a + g.h.mu * mi.c;
  const RMatrix mt = g.h.lambda * mi.b + g.h.mu * mi.d;
  // Solving g·g⁻¹ = e gives λ' = −λ̃, μ' = −μ̃ and κ' = −κ + λ̃ᵗμ̃ − μ̃ᵗλ̃.
  return {mi, {-lt, -mt, -g.h.kappa + lt * transpose(mt) - mt * transpose(lt)}};
}

double jacobi_defect(const JacobiElement& g) { return std::max(symplectic_defect(g.sp), heisenberg_defect(g.h)); }

// ---- G_* and G_*^J

GStarElement gstar_identity(std::size_t n) { return {CMatrix::identity(n), CMatrix(n, n)}; }

GStarElement gstar_mul(const GStarElement& x, const GStarElement& y) {
  require(x.n() == y.n(), "gstar_mul: degrees differ");
  return {x.p * y.p + x.q * conj(y.q), x.p * y.q + x.q * conj(y.p)};
}

GStarElement gstar_inverse(const GStarElement& x) {
  const CMatrix inv = inverse(x.matrix());
  const std::size_t k = x.n();
  return {inv.block(0, 0, k, k), inv.block(0, k, k, k)};
}

double gstar_defect(const GStarElement& x) {
  const std::size_t k = x.n();
  const CMatrix real_form = tstar(k) * x.matrix() * tstar_inverse(k);
  const RMatrix re = real_part(real_form);
  const RMatrix j = j_matrix(k);
  return std::max(max_abs(imag_part(real_form)), max_abs_diff(transpose(re) * j * re, j));
}

JacobiStarElement jacobistar_identity(std::size_t n, std::size_t m) {
  return {gstar_identity(n), CMatrix(m, n), RMatrix(m, m)};
}

JacobiStarElement jacobistar_mul(const JacobiStarElement& g1, const JacobiStarElement& g2) {
  require(g1.n() == g2.n() && g1.m() == g2.m(), "jacobistar_mul: (n, m) differ");
  const CMatrix xt = g1.xi * g2.g.p + conj(g1.xi) * conj(g2.g.q);
  // iκ'' = iκ + iκ' + ξ̃ ᵗξ̄' − conj(ξ̃) ᵗξ', and the last two terms form 2i·Im(ξ̃ ᵗξ̄').
  const RMatrix twist = imag_part(xt * transpose(conj(g2.xi)));
  return {gstar_mul(g1.g, g2.g), xt + g2.xi, g1.kappa + g2.kappa + twist * 2.0};
}

JacobiStarElement jacobistar_inverse(const JacobiStarElement& g) {
  const GStarElement gi = gstar_inverse(g.g);
  const CMatrix xt = g.xi * gi.p + conj(g.xi) * conj(gi.q);
  const RMatrix twist = imag_part(xt * transpose(conj(xt)));
  return {gi, -xt, -g.kappa + twist * 2.0};
}

double jacobistar_defect(const JacobiStarElement& g) {
  const RMatrix c = g.kappa - imag_part(g.xi * transpose(conj(g.xi)));
  return std::max(gstar_defect(g.g), max_abs(antisym_part(c)));
}

// ---- SL(2n, C) ⋉ H_C

ComplexHeisenbergElement complex_heisenberg_mul(const ComplexHeisenbergElement& x,
                                                const ComplexHeisenbergElement& y) {
  require(x.xi.same_shape(y.xi), "complex_heisenberg_mul: shapes differ");
  return {x.xi + y.xi, x.eta + y.eta, x.zeta + y.zeta + x.xi * transpose(y.eta) - x.eta * transpose(y.xi)};
}

ComplexJacobiElement complex_jacobi_mul(const ComplexJacobiElement& x, const ComplexJacobiElement& y) {
  const CMatrix xt = x.h.xi * y.p + x.h.eta * y.r;
  const CMatrix et = x.h.xi * y.q + x.h.eta * y.s;
  return {x.p * y.p + x.q * y.r,
          x.p * y.q + x.q * y.s,
          x.r * y.p + x.s * y.r,
          x.r * y.q + x.s * y.s,
          {xt + y.h.xi, et + y.h.eta, x.h.zeta + y.h.zeta + xt * transpose(y.h.eta) - et * transpose(y.h.xi)}};
}

ComplexJacobiElement as_complex(const JacobiStarElement& g) {
  const cdouble i(0.0, 1.0);
  return {g.g.p, g.g.q, conj(g.g.q), conj(g.g.p), {g.xi, conj(g.xi), complexify(g.kappa) * i}};
}

// ---- comparison maps

JacobiStarElement theta_map(const JacobiElement& g) {
  const cdouble i(0.0, 1.0);
  const CMatrix a = complexify(g.sp.a), b = complexify(g.sp.b), c = complexify(g.sp.c), d = complexify(g.sp.d);
  CMatrix p = (a + d) + (b - c) * i;
  CMatrix q = (a - d) - (b + c) * i;
  p *= cdouble(0.5);
  q *= cdouble(0.5);
  CMatrix xi = complexify(g.h.lambda, g.h.mu);
  xi *= cdouble(0.5);
  return {{std::move(p), std::move(q)}, std::move(xi), g.h.kappa * -0.5};
}

RMatrix embed_sp(const JacobiElement& g) {
  const std::size_t n = g.n(), m = g.m();
  const auto& s = g.sp;
  const auto& h = g.h;
  const RMatrix mut = transpose(h.mu), lat = transpose(h.lambda);
  RMatrix e(2 * (n + m), 2 * (n + m));
  const std::size_t r0 = 0, r1 = n, r2 = n + m, r3 = 2 * n + m;
  e.set_block(r0, r0, s.a);
  e.set_block(r0, r2, s.b);
  e.set_block(r0, r3, s.a * mut - s.b * lat);
  e.set_block(r1, r0, h.lambda);
  e.set_block(r1, r1, RMatrix::identity(m));
  e.set_block(r1, r2, h.mu);
  e.set_block(r1, r3, h.kappa);
  e.set_block(r2, r0, s.c);
  e.set_block(r2, r2, s.d);
  e.set_block(r2, r3, s.c * mut - s.d * lat);
  e.set_block(r3, r3, RMatrix::identity(m));
  return e;
}

CMatrix tstar(std::size_t k) {
  const double s = 1.0 / std::sqrt(2.0);
  CMatrix t(2 * k, 2 * k);
  for (std::size_t i = 0; i < k; ++i) {
    t(i, i) = s;
    t(i, k + i) = s;
    t(k + i, i) = cdouble(0.0, s);
    t(k + i, k + i) = cdouble(0.0, -s);
  }
  return t;
}

CMatrix tstar_inverse(std::size_t k) {
  // T_* is unitary.
  return adjoint(tstar(k));
}

CMatrix tstar_conjugate(const RMatrix& e) {
  require(e.square() && e.rows() % 2 == 0, "tstar_conjugate: matrix must be 2k x 2k");
  const std::size_t k = e.rows() / 2;
  return tstar_inverse(k) * complexify(e) * tstar(k);
}

CMatrix star_block_form(const JacobiStarElement& g) {
  const std::size_t n = g.n(), m = g.m(), k = n + m;
  const cdouble i(0.0, 1.0);
  const CMatrix& p = g.g.p;
  const CMatrix& q = g.g.q;
  const CMatrix xi = g.xi, xib = conj(g.xi);
  const CMatrix kap = complexify(g.kappa);
  CMatrix ps(k, k), qs(k, k);
  ps.set_block(0, 0, p);
  ps.set_block(0, n, q * transpose(xi) - p * transpose(xib));
  ps.set_block(n, 0, xi);
  ps.set_block(n, n, CMatrix::identity(m) - kap * i);
  qs.set_block(0, 0, q);
  qs.set_block(0, n, p * transpose(xib) - q * transpose(xi));
  qs.set_block(n, 0, xib);
  qs.set_block(n, n, kap * i);
  CMatrix out(2 * k, 2 * k);
  out.set_block(0, 0, ps);
  out.set_block(0, k, qs);
  out.set_block(k, 0, conj(qs));
  out.set_block(k, k, conj(ps));
  return out;
}

// ---- sampling

SpElement random_sp(std::size_t n, Rng& rng) {
  SpElement out = sp_identity(n);
  const int count = 4 + rng.index(5);
  for (int k = 0; k < count; ++k) {
    SpElement gen = sp_identity(n);
    switch (rng.index(3)) {
      case 0:
        gen.b = rng.real_symmetric(n, -1.0, 1.0);
        break;
      case 1: {
        const RMatrix a = RMatrix::identity(n) + rng.real_matrix(n, n, -1.0, 1.0) * 0.3;
        gen.a = a;
        gen.d = transpose(inverse(a));
        break;
      }
      default:
        gen = {RMatrix(n, n), RMatrix::identity(n), -RMatrix::identity(n), RMatrix(n, n)};
        break;
    }
    out = sp_mul(out, gen);
  }
  return out;
}

HeisenbergElement random_heisenberg(std::size_t n, std::size_t m, Rng& rng) {
  HeisenbergElement h;
  h.lambda = rng.real_matrix(m, n, -1.0, 1.0);
  h.mu = rng.real_matrix(m, n, -1.0, 1.0);
  h.kappa = rng.real_symmetric(m, -1.0, 1.0) - h.mu * transpose(h.lambda);
  return h;
}

JacobiElement random_jacobi(std::size_t n, std::size_t m, Rng& rng) {
  SpElement s = random_sp(n, rng);
  return {std::move(s), random_heisenberg(n, m, rng)};
}

JacobiElement random_jacobi(std::size_t n, std::size_t m, std::uint64_t seed) {
  Rng rng(seed);
  return random_jacobi(n, m, rng);
}

}  // namespace sjgeo
