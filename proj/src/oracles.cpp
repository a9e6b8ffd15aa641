#include "sjgeo/oracles.hpp"

#include <cmath>

namespace sjgeo {

RVector directional_derivative(const ChartMap& f, std::span<const double> x, std::span<const double> v, double h) {
  if (x.size() != v.size()) throw ShapeMismatch("directional_derivative: point and direction differ in size");
  auto central = [&](double step) {
    RVector xp(x.begin(), x.end()), xm(x.begin(), x.end());
    for (std::size_t i = 0; i < x.size(); ++i) {
      xp[i] += step * v[i];
      xm[i] -= step * v[i];
    }
    RVector fp = f(xp);
    const RVector fm = f(xm);
    for (std::size_t i = 0; i < fp.size(); ++i) fp[i] = (fp[i] - fm[i]) / (2.0 * step);
    return fp;
  };
  RVector coarse = central(h);
  const RVector fine = central(0.5 * h);
  for (std::size_t i = 0; i < coarse.size(); ++i) coarse[i] = (4.0 * fine[i] - coarse[i]) / 3.0;
  return coarse;
}

double pushforward_step(std::span<const double> x) { return 1e-4 * (1.0 + chart_scale(x)); }

namespace {

Tangent push_generic(Model out_model, const ChartLayout& layout, const ChartMap& f, std::span<const double> x,
                     const Tangent& t, double h) {
  const RVector v = tangent_to_chart(t);
  if (h <= 0.0) h = pushforward_step(x);
  return tangent_from_chart(out_model, layout, directional_derivative(f, x, v, h));
}

}  // namespace

Tangent pushforward(const JacobiElement& g, const UpperPoint& p, const Tangent& t, double h) {
  const ChartLayout layout{p.n(), p.m()};
  const RVector x = to_chart(p.omega, p.z);
  auto f = [&](std::span<const double> y) {
    UpperPoint q;
    from_chart(layout, y, q.omega, q.z);
    const UpperPoint r = act_upper(g, q);
    return to_chart(r.omega, r.z);
  };
  return push_generic(Model::upper, layout, f, x, t, h);
}

Tangent pushforward(const JacobiStarElement& g, const DiskPoint& p, const Tangent& t, double h) {
  const ChartLayout layout{p.n(), p.m()};
  const RVector x = to_chart(p.w, p.eta);
  auto f = [&](std::span<const double> y) {
    DiskPoint q;
    from_chart(layout, y, q.w, q.eta);
    const DiskPoint r = act_disk(g, q);
    return to_chart(r.w, r.eta);
  };
  return push_generic(Model::disk, layout, f, x, t, h);
}

CMatrix pushforward_siegel(const SpElement& g, const CMatrix& omega, const CMatrix& domega, double h) {
  const ChartLayout layout{omega.rows(), 0};
  const CMatrix none(0, omega.rows());
  const RVector x = to_chart(omega, none);
  auto f = [&](std::span<const double> y) {
    CMatrix om, z;
    from_chart(layout, y, om, z);
    return to_chart(act_siegel(g, om), none);
  };
  return push_generic(Model::upper, layout, f, x, {Model::upper, domega, none}, h).dmat;
}

CMatrix pushforward_gstar(const GStarElement& g, const CMatrix& w, const CMatrix& dw, double h) {
  const ChartLayout layout{w.rows(), 0};
  const CMatrix none(0, w.rows());
  const RVector x = to_chart(w, none);
  auto f = [&](std::span<const double> y) {
    CMatrix ww, z;
    from_chart(layout, y, ww, z);
    return to_chart(act_gstar(g, ww), none);
  };
  return push_generic(Model::disk, layout, f, x, {Model::disk, dw, none}, h).dmat;
}

Tangent cayley_pushforward(const DiskPoint& p, const Tangent& t, double h) {
  const ChartLayout layout{p.n(), p.m()};
  const RVector x = to_chart(p.w, p.eta);
  auto f = [&](std::span<const double> y) {
    DiskPoint q;
    from_chart(layout, y, q.w, q.eta);
    const UpperPoint r = cayley(q);
    return to_chart(r.omega, r.z);
  };
  return push_generic(Model::upper, layout, f, x, t, h);
}

double laplace_beltrami(const ChartFunction& f, std::span<const double> x, const TensorField& g, double h) {
  const std::size_t d = x.size();
  RVector y(x.begin(), x.end());
  auto at = [&](std::size_t i, double si, std::size_t j, double sj) {
    y[i] += si;
    y[j] += sj;
    const double v = f(y);
    y[i] = x[i];
    y[j] = x[j];
    return v;
  };

  const RMatrix g0 = g(x);
  const RMatrix gi = inverse(g0);
  const double det0 = determinant(g0);
  if (!(det0 > 0.0)) throw SingularMatrix("laplace_beltrami: metric tensor is not positive definite");

  double second = 0.0;
  RVector grad(d);
  for (std::size_t i = 0; i < d; ++i) {
    grad[i] = (at(i, h, i, 0.0) - at(i, -h, i, 0.0)) / (2.0 * h);
    for (std::size_t j = 0; j < d; ++j) {
      const double fij = (at(i, h, j, h) - at(i, h, j, -h) - at(i, -h, j, h) + at(i, -h, j, -h)) / (4.0 * h * h);
      second += gi(i, j) * fij;
    }
  }

  // b^j = |g|^{-1/2} Σ_i ∂_i(|g|^{1/2} g^{ij})
  const double ht = 0.1 * h;
  RVector b(d, 0.0);
  for (std::size_t i = 0; i < d; ++i) {
    RVector xp(x.begin(), x.end()), xm(x.begin(), x.end());
    xp[i] += ht;
    xm[i] -= ht;
    const RMatrix gp = g(xp), gm = g(xm);
    const RMatrix ip = inverse(gp), im = inverse(gm);
    const double sp = std::sqrt(determinant(gp)), sm = std::sqrt(determinant(gm));
    for (std::size_t j = 0; j < d; ++j) b[j] += (sp * ip(i, j) - sm * im(i, j)) / (2.0 * ht);
  }
  double first = 0.0;
  for (std::size_t j = 0; j < d; ++j) first += b[j] * grad[j];
  return second + first / std::sqrt(det0);
}

double q_disk_n1_display(cdouble w, cdouble eta, cdouble dw, cdouble deta) {
  const double r = std::norm(w);
  const double s = 1.0 - r;
  const cdouble quarter = std::norm(dw) / (s * s) + std::norm(deta) / s +
                          ((1.0 + r) * std::norm(eta) - std::conj(w) * eta * eta - w * std::conj(eta) * std::conj(eta)) /
                              (s * s * s) * std::norm(dw) +
                          (eta * std::conj(w) - std::conj(eta)) / (s * s) * dw * std::conj(deta) +
                          (std::conj(eta) * w - eta) / (s * s) * std::conj(dw) * deta;
  return 4.0 * quarter.real();
}

double lap_disk_n1_display(const ChartFunction& f, std::span<const double> x, double h) {
  if (x.size() != 4) throw ShapeMismatch("lap_disk_n1_display: expects the n = m = 1 chart");
  RVector y(x.begin(), x.end());
  auto d2 = [&](std::size_t i, std::size_t j) {
    auto at = [&](double si, double sj) {
      y[i] += si;
      y[j] += sj;
      const double v = f(y);
      y[i] = x[i];
      y[j] = x[j];
      return v;
    };
    return (at(h, h) - at(h, -h) - at(-h, h) + at(-h, -h)) / (4.0 * h * h);
  };
  // chart (a, b, c, e) = (Re W, Im W, Re η, Im η)
  const double faa = d2(0, 0), fbb = d2(1, 1), fcc = d2(2, 2), fee = d2(3, 3);
  const double fac = d2(0, 2), fae = d2(0, 3), fbc = d2(1, 2), fbe = d2(1, 3);
  const double f_wwb = 0.25 * (faa + fbb);
  const double f_eeb = 0.25 * (fcc + fee);
  // ∂W∂η̄ = ¼(∂a − i∂b)(∂c + i∂e), ∂W̄∂η = its conjugate
  const cdouble f_web = 0.25 * cdouble(fac + fbe, fae - fbc);
  const cdouble f_wbe = std::conj(f_web);

  const cdouble w(x[0], x[1]), eta(x[2], x[3]);
  const double r = std::norm(w);
  const double s = 1.0 - r;
  const cdouble v = s * s * f_wwb + s * f_eeb + s * (eta - std::conj(eta) * w) * f_web +
                    s * (std::conj(eta) - eta * std::conj(w)) * f_wbe -
                    (std::conj(w) * eta * eta + w * std::conj(eta) * std::conj(eta)) * f_eeb +
                    (1.0 + r) * std::norm(eta) * f_eeb;
  return v.real();
}

}  // namespace sjgeo
