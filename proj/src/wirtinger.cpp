#include "sjgeo/wirtinger.hpp"

namespace sjgeo {

double first_step(std::span<const double> x) { return 1e-5 * (1.0 + chart_scale(x)); }
double second_step(std::span<const double> x) { return 1e-4 * (1.0 + chart_scale(x)); }

double chart_margin(Model model, const ChartLayout& layout, std::span<const double> x) {
  CMatrix mat, vec;
  from_chart(layout, x, mat, vec);
  return model == Model::upper ? upper_margin(mat) : disk_margin(mat);
}

void require_margin(Model model, const ChartLayout& layout, std::span<const double> x, double required) {
  const double margin = chart_margin(model, layout, x);
  if (!(margin >= required))
    throw DomainMargin("point margin " + std::to_string(margin) + " is below the stencil requirement " +
                       std::to_string(required));
}

namespace {

RVector central_gradient(const ScalarField& f, std::span<const double> x, double h) {
  RVector g(x.size());
  RVector y(x.begin(), x.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    y[i] = x[i] + h;
    const double fp = f(y);
    y[i] = x[i] - h;
    const double fm = f(y);
    y[i] = x[i];
    g[i] = (fp - fm) / (2.0 * h);
  }
  return g;
}

RMatrix mixed_stencil(const ScalarField& f, std::span<const double> x, double h) {
  const std::size_t d = x.size();
  RMatrix hs(d, d);
  RVector y(x.begin(), x.end());
  auto eval = [&](std::size_t i, double si, std::size_t j, double sj) {
    y[i] += si;
    y[j] += sj;
    const double v = f(y);
    y[i] = x[i];
    y[j] = x[j];
    return v;
  };
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = i; j < d; ++j) {
      const double v = (eval(i, h, j, h) - eval(i, h, j, -h) - eval(i, -h, j, h) + eval(i, -h, j, -h)) / (4.0 * h * h);
      hs(i, j) = hs(j, i) = v;
    }
  return hs;
}

}  // namespace

RVector fd_gradient(const ScalarField& f, std::span<const double> x, double h, bool richardson) {
  RVector g = central_gradient(f, x, h);
  if (!richardson) return g;
  const RVector g2 = central_gradient(f, x, 0.5 * h);
  for (std::size_t i = 0; i < g.size(); ++i) g[i] = (4.0 * g2[i] - g[i]) / 3.0;
  return g;
}

RMatrix fd_hessian(const ScalarField& f, std::span<const double> x, double h) {
  RMatrix coarse = mixed_stencil(f, x, h);
  const RMatrix fine = mixed_stencil(f, x, 0.5 * h);
  for (std::size_t k = 0; k < coarse.size(); ++k)
    coarse.data()[k] = (4.0 * fine.data()[k] - coarse.data()[k]) / 3.0;
  return coarse;
}

DerivativeBundle bundle_from_gradient(const ChartLayout& layout, const RVector& grad) {
  if (grad.size() != layout.dim()) throw ShapeMismatch("bundle_from_gradient: gradient has the wrong dimension");
  const std::size_t n = layout.n, m = layout.m;
  DerivativeBundle b{CMatrix(n, n), CMatrix(n, n), CMatrix(n, m), CMatrix(n, m)};
  auto wirt = [&](std::size_t c, bool bar) {
    const double gx = grad[layout.re_index(c)], gy = grad[layout.im_index(c)];
    return 0.5 * cdouble(gx, bar ? gy : -gy);
  };
  const auto pairs = symmetric_pairs(n);
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    const auto [a, bb] = pairs[c];
    const double weight = a == bb ? 1.0 : 0.5;
    b.d_mat(a, bb) = b.d_mat(bb, a) = weight * wirt(c, false);
    b.d_mat_bar(a, bb) = b.d_mat_bar(bb, a) = weight * wirt(c, true);
  }
  for (std::size_t k = 0; k < m; ++k)
    for (std::size_t l = 0; l < n; ++l) {
      const std::size_t c = layout.pairs() + k * n + l;
      b.d_vec(l, k) = wirt(c, false);
      b.d_vec_bar(l, k) = wirt(c, true);
    }
  return b;
}

DerivativeBundle wirtinger_bundle(const ScalarField& f, std::span<const double> x, double h, bool richardson) {
  require_margin(f.model, f.layout, x, 2.0 * h);
  return bundle_from_gradient(f.layout, fd_gradient(f, x, h, richardson));
}

}  // namespace sjgeo
