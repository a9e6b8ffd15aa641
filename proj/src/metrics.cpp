#include "sjgeo/metrics.hpp"

#include <cmath>

namespace sjgeo {

namespace {

constexpr double kUpperRealness = 1e-9;
constexpr double kDiskRealness = 1e-8;

double real_or_throw(cdouble q, double tol, const char* what) {
  if (std::abs(q.imag()) > tol * (1.0 + std::abs(q.real())))
    throw NumericalDefect(std::string(what) + ": imaginary part exceeds the realness tolerance");
  return q.real();
}

void require_shapes(const Tangent& t, std::size_t n, std::size_t m) {
  if (auto v = tangent_violation(t, n, m); !v.empty()) throw InvalidInput("invalid tangent: " + v);
}

}  // namespace

std::string tangent_violation(const Tangent& t, std::size_t n, std::size_t m) {
  if (t.dmat.rows() != n || t.dmat.cols() != n) return "dmat must be n x n";
  if (t.dvec.rows() != m || t.dvec.cols() != n) return "dvec must be m x n";
  if (!all_finite(t.dmat) || !all_finite(t.dvec)) return "entries must be finite";
  if (symmetry_defect(t.dmat) > kSymmetryTol) return "dmat must be symmetric";
  return {};
}

RVector tangent_to_chart(const Tangent& t) { return to_chart(t.dmat, t.dvec); }

Tangent tangent_from_chart(Model model, const ChartLayout& layout, std::span<const double> v) {
  Tangent t;
  t.model = model;
  from_chart(layout, v, t.dmat, t.dvec);
  return t;
}

void require_valid(const MetricParams& params) {
  if (!(params.a > 0.0) || !(params.b > 0.0) || !std::isfinite(params.a) || !std::isfinite(params.b))
    throw InvalidInput("metric parameters A and B must be positive and finite");
}

double q_siegel(const CMatrix& omega, const CMatrix& domega) {
  const CMatrix yi = complexify(inverse(imag_part(omega)));
  return real_or_throw(trace(yi * domega * yi * conj(domega)), kUpperRealness, "q_siegel");
}

cdouble q_upper_complex(const UpperPoint& p, const Tangent& t, const MetricParams& params) {
  require_shapes(t, p.n(), p.m());
  const CMatrix yi = complexify(inverse(p.y()));
  const CMatrix v = complexify(p.v());
  const CMatrix& dO = t.dmat;
  const CMatrix dOb = conj(dO);
  const CMatrix& dZ = t.dvec;
  const CMatrix dZb = conj(dZ);
  const CMatrix vyi = v * yi;
  const cdouble sym_part = trace(yi * dO * yi * dOb);
  const cdouble b_part = trace(yi * transpose(v) * vyi * dO * yi * dOb) + trace(yi * transpose(dZ) * dZb) -
                         trace(vyi * dO * yi * transpose(dZb)) - trace(vyi * dOb * yi * transpose(dZ));
  return params.a * sym_part + params.b * b_part;
}

double q_upper(const UpperPoint& p, const Tangent& t, const MetricParams& params) {
  return real_or_throw(q_upper_complex(p, t, params), kUpperRealness, "q_upper");
}

double q_disk_n(const CMatrix& w, const CMatrix& dw) {
  const CMatrix id = CMatrix::identity(w.rows());
  const CMatrix wb = conj(w);
  const CMatrix k1 = inverse(id - w * wb);
  const CMatrix k2 = inverse(id - wb * w);
  return real_or_throw(4.0 * trace(k1 * dw * k2 * conj(dw)), kDiskRealness, "q_disk_n");
}

cdouble q_disk_complex(const DiskPoint& p, const Tangent& t, const MetricParams& params) {
  require_shapes(t, p.n(), p.m());
  const std::size_t n = p.n();
  const CMatrix id = CMatrix::identity(n);
  const CMatrix& w = p.w;
  const CMatrix wb = conj(w);
  const CMatrix& eta = p.eta;
  const CMatrix etab = conj(eta);
  const CMatrix& dW = t.dmat;
  const CMatrix dWb = conj(dW);
  const CMatrix& de = t.dvec;
  const CMatrix deb = conj(de);
  const CMatrix k1 = inverse(id - w * wb);
  const CMatrix k2 = inverse(id - wb * w);
  const CMatrix ib = inverse(id - wb);
  const CMatrix iw = inverse(id - w);
  const CMatrix tail = dW * k2 * dWb;  // dW (I − W̄W)⁻¹ dW̄, shared by the last six terms
  const CMatrix te = transpose(eta), teb = transpose(etab);

  cdouble b_part = trace(k1 * transpose(de) * deb);
  b_part += trace((eta * wb - etab) * k1 * dW * k2 * transpose(deb));
  b_part += trace((etab * w - eta) * k2 * dWb * k1 * transpose(de));
  b_part -= trace(k1 * te * eta * k2 * wb * tail);
  b_part -= trace(w * k2 * teb * etab * k1 * tail);
  b_part += trace(k1 * te * etab * k1 * tail);
  b_part += trace(ib * teb * eta * wb * k1 * tail);
  b_part += trace(ib * (id - w) * k2 * teb * eta * k2 * (id - wb) * iw * tail);
  b_part -= trace(k1 * (id - w) * ib * teb * eta * iw * tail);

  return 4.0 * params.a * trace(k1 * tail) + 4.0 * params.b * b_part;
}

double q_disk(const DiskPoint& p, const Tangent& t, const MetricParams& params) {
  return real_or_throw(q_disk_complex(p, t, params), kDiskRealness, "q_disk");
}

double q_disk_frame(const DiskPoint& p, const Tangent& t, const MetricParams& params) {
  require_shapes(t, p.n(), p.m());
  const CMatrix id = CMatrix::identity(p.n());
  const CMatrix wb = conj(p.w);
  const CMatrix k1 = inverse(id - p.w * wb);
  const CMatrix k2 = inverse(id - wb * p.w);
  const CMatrix theta = t.dvec + (p.eta * wb - conj(p.eta)) * k1 * t.dmat;
  const cdouble q = 4.0 * params.a * trace(k1 * t.dmat * k2 * conj(t.dmat)) +
                    4.0 * params.b * trace(k1 * transpose(theta) * conj(theta));
  return real_or_throw(q, kDiskRealness, "q_disk_frame");
}

std::string to_string(MetricKind kind) {
  switch (kind) {
    case MetricKind::siegel: return "siegel";
    case MetricKind::upper: return "upper";
    case MetricKind::disk_n: return "disk_n";
    case MetricKind::disk: return "disk";
  }
  return "?";
}

ChartLayout metric_layout(MetricKind kind, std::size_t n, std::size_t m) {
  const bool matrix_only = kind == MetricKind::siegel || kind == MetricKind::disk_n;
  return {n, matrix_only ? 0 : m};
}

double metric_form(MetricKind kind, const ChartLayout& layout, std::span<const double> x,
                   std::span<const double> v, const MetricParams& params) {
  CMatrix mat, vec, dmat, dvec;
  from_chart(layout, x, mat, vec);
  from_chart(layout, v, dmat, dvec);
  switch (kind) {
    case MetricKind::siegel: return q_siegel(mat, dmat);
    case MetricKind::upper: return q_upper({mat, vec}, {Model::upper, dmat, dvec}, params);
    case MetricKind::disk_n: return q_disk_n(mat, dmat);
    case MetricKind::disk: return q_disk({mat, vec}, {Model::disk, dmat, dvec}, params);
  }
  return 0.0;
}

RMatrix polarize(std::size_t dim, const std::function<double(std::span<const double>)>& q) {
  RMatrix g(dim, dim);
  RVector e(dim, 0.0);
  for (std::size_t i = 0; i < dim; ++i) {
    e.assign(dim, 0.0);
    e[i] = 1.0;
    g(i, i) = q(e);
    for (std::size_t j = i + 1; j < dim; ++j) {
      e.assign(dim, 0.0);
      e[i] = 1.0;
      e[j] = 1.0;
      const double plus = q(e);
      e[j] = -1.0;
      const double minus = q(e);
      g(i, j) = g(j, i) = 0.25 * (plus - minus);
    }
  }
  return g;
}

MetricTensor metric_tensor(MetricKind kind, const ChartLayout& layout, std::span<const double> x,
                           const MetricParams& params) {
  const RVector xs(x.begin(), x.end());
  auto q = [&](std::span<const double> v) { return metric_form(kind, layout, xs, v, params); };
  return {layout.dim(), polarize(layout.dim(), q), kChartOrdering};
}

MetricTensor metric_tensor(const UpperPoint& p, const MetricParams& params) {
  const RVector x = to_chart(p.omega, p.z);
  return metric_tensor(MetricKind::upper, {p.n(), p.m()}, x, params);
}

MetricTensor metric_tensor(const DiskPoint& p, const MetricParams& params) {
  const RVector x = to_chart(p.w, p.eta);
  return metric_tensor(MetricKind::disk, {p.n(), p.m()}, x, params);
}

}  // namespace sjgeo
