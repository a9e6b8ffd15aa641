#include "sjgeo/operators.hpp"

#include <cmath>

namespace sjgeo {

namespace {

using FO = FirstOrderMatrix;

constexpr double kOperatorRealness = 1e-6;

struct UpperFrame {
  CMatrix y, yi, v;
};

struct DiskFrame {
  CMatrix w, wb, eta, etab, k1, k2, id;
};

UpperFrame upper_frame(const ChartLayout& layout, std::span<const double> x) {
  CMatrix om, z;
  from_chart(layout, x, om, z);
  const RMatrix y = imag_part(om);
  return {complexify(y), complexify(inverse(y)), complexify(imag_part(z))};
}

DiskFrame disk_frame(const ChartLayout& layout, std::span<const double> x) {
  CMatrix w, eta;
  from_chart(layout, x, w, eta);
  const CMatrix id = CMatrix::identity(layout.n);
  const CMatrix wb = conj(w);
  return {w, wb, eta, conj(eta), id - w * wb, id - wb * w, id};
}

// The A-bracket without its prefactor: σ(Yᵗ(Y∂Ω̄)∂Ω) + the three
// mixed terms. The LB variant replaces σ(VY⁻¹ᵗVᵗ(Y∂Z̄)∂Z) by the frame form.
SecondOrderSymbol upper_bracket(const ChartLayout& layout, std::span<const double> x, Transcription tr) {
  const UpperFrame u = upper_frame(layout, x);
  const FO d = FO::d_mat(layout, false), db = FO::d_mat(layout, true);
  if (tr == Transcription::laplace_beltrami) {
    // 𝔇 = ∂Ω + sym(∂Z·VY⁻¹) is dual to the frame (dΩ, dZ − VY⁻¹dΩ).
    const CMatrix x_frame = u.v * u.yi;
    const FO dz = FO::d_vec(layout, false), dzb = FO::d_vec(layout, true);
    const FO dd = d + symmetrize(dz * x_frame);
    const FO ddb = db + symmetrize(dzb * x_frame);
    return trace_product(u.y * transpose(u.y * ddb), dd);
  }
  SecondOrderSymbol s = trace_product(u.y * transpose(u.y * db), d);
  if (layout.m == 0) return s;
  const FO dz = FO::d_vec(layout, false), dzb = FO::d_vec(layout, true);
  const CMatrix vt = transpose(u.v);
  s = s + trace_product(u.v * u.yi * vt * transpose(u.y * dzb), dz);
  s = s + trace_product(u.v * transpose(u.y * db), dz);
  s = s + trace_product(vt * transpose(u.y * dzb), d);
  return s;
}

SecondOrderSymbol upper_d(const ChartLayout& layout, std::span<const double> x) {
  const UpperFrame u = upper_frame(layout, x);
  return trace_product(u.y * FO::d_vec(layout, false), transpose(FO::d_vec(layout, true)));
}

SecondOrderSymbol disk_bracket(const ChartLayout& layout, std::span<const double> x, Transcription tr) {
  const DiskFrame k = disk_frame(layout, x);
  const FO d = FO::d_mat(layout, false), db = FO::d_mat(layout, true);
  if (tr == Transcription::laplace_beltrami) {
    // 𝔇 = ∂W − sym(∂η·X) with X = (ηW̄ − η̄)(I − WW̄)⁻¹, dual to the frame
    // (dW, dη + X dW).
    const FO dz = FO::d_vec(layout, false), dzb = FO::d_vec(layout, true);
    const CMatrix xf = (k.eta * k.wb - k.etab) * inverse(k.k1);
    const FO dd = d - symmetrize(dz * xf);
    const FO ddb = db - symmetrize(dzb * conj(xf));
    return trace_product(k.k1 * transpose(k.k1 * ddb), dd);
  }
  SecondOrderSymbol s = trace_product(k.k1 * transpose(k.k1 * db), d);
  if (layout.m == 0) return s;
  const FO dz = FO::d_vec(layout, false), dzb = FO::d_vec(layout, true);
  const FO tdzb = transpose(dzb);
  const FO k2dz = k.k2 * dz;
  const CMatrix te = transpose(k.eta), teb = transpose(k.etab);
  const CMatrix k1i = inverse(k.k1), k2i = inverse(k.k2);
  s = s + trace_product(transpose(k.eta - k.etab * k.w) * tdzb, k.k2 * d);
  s = s + trace_product((k.etab - k.eta * k.wb) * transpose(k.k1 * db), dz);
  s = s - trace_product(k.eta * k.wb * k1i * te * tdzb, k2dz);
  s = s - trace_product(k.etab * k.w * k2i * teb * tdzb, k2dz);
  s = s + trace_product(k.etab * k1i * te * tdzb, k2dz);
  s = s + trace_product(k.eta * k.wb * k.w * k2i * teb * tdzb, k2dz);
  return s;
}

SecondOrderSymbol disk_d(const ChartLayout& layout, std::span<const double> x) {
  const DiskFrame k = disk_frame(layout, x);
  return trace_product(k.k2 * FO::d_vec(layout, false), transpose(FO::d_vec(layout, true)));
}

void require_layout(OperatorKind kind, const ChartLayout& layout) {
  const bool matrix_only = kind == OperatorKind::siegel || kind == OperatorKind::disk_n;
  if (matrix_only && layout.m != 0)
    throw ShapeMismatch(to_string(kind) + " acts on the matrix variable only (chart with m = 0)");
  const bool needs_vec = kind == OperatorKind::D || kind == OperatorKind::Dtilde;
  if (needs_vec && layout.m == 0) throw ShapeMismatch(to_string(kind) + " needs m >= 1");
}

}  // namespace

std::string to_string(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::siegel: return "siegel";
    case OperatorKind::upper: return "upper";
    case OperatorKind::disk_n: return "disk_n";
    case OperatorKind::disk: return "disk";
    case OperatorKind::D: return "D";
    case OperatorKind::L: return "L";
    case OperatorKind::Dtilde: return "Dtilde";
    case OperatorKind::Ltilde: return "Ltilde";
  }
  return "?";
}

OperatorKind operator_kind_from_string(const std::string& s) {
  for (auto k : {OperatorKind::siegel, OperatorKind::upper, OperatorKind::disk_n, OperatorKind::disk, OperatorKind::D,
                 OperatorKind::L, OperatorKind::Dtilde, OperatorKind::Ltilde})
    if (to_string(k) == s) return k;
  throw InvalidInput("unknown operator '" + s + "'");
}

Model operator_model(OperatorKind kind) {
  switch (kind) {
    case OperatorKind::siegel:
    case OperatorKind::upper:
    case OperatorKind::D:
    case OperatorKind::L: return Model::upper;
    default: return Model::disk;
  }
}

ChartLayout operator_layout(OperatorKind kind, std::size_t n, std::size_t m) {
  const bool matrix_only = kind == OperatorKind::siegel || kind == OperatorKind::disk_n;
  return {n, matrix_only ? 0 : m};
}

SecondOrderSymbol operator_symbol(OperatorKind kind, const ChartLayout& layout, std::span<const double> x,
                                  const MetricParams& params, Transcription tr) {
  require_layout(kind, layout);
  switch (kind) {
    case OperatorKind::siegel: return 4.0 * upper_bracket(layout, x, tr);
    case OperatorKind::upper: {
      require_valid(params);
      SecondOrderSymbol s = (4.0 / params.a) * upper_bracket(layout, x, tr);
      if (layout.m > 0) s = s + (4.0 / params.b) * upper_d(layout, x);
      return s;
    }
    case OperatorKind::disk_n: return disk_bracket(layout, x, tr);
    case OperatorKind::disk: {
      require_valid(params);
      SecondOrderSymbol s = (1.0 / params.a) * disk_bracket(layout, x, tr);
      if (layout.m > 0) s = s + (1.0 / params.b) * disk_d(layout, x);
      return s;
    }
    case OperatorKind::D: return upper_d(layout, x);
    case OperatorKind::L: return upper_bracket(layout, x, tr);
    case OperatorKind::Dtilde: return disk_d(layout, x);
    case OperatorKind::Ltilde: return disk_bracket(layout, x, tr);
  }
  throw InvalidInput("unknown operator kind");
}

cdouble apply_symbol(const SecondOrderSymbol& s, const ChartLayout& layout, const RMatrix& real_hessian) {
  const CMatrix l = wirtinger_transform(layout);
  const CMatrix coeff = transpose(l) * s.f * l;
  cdouble v{};
  for (std::size_t k = 0; k < coeff.size(); ++k) v += coeff.data()[k] * real_hessian.data()[k];
  return v;
}

double apply_operator(OperatorKind kind, const ScalarField& f, std::span<const double> x, const MetricParams& params,
                      Transcription tr, double h) {
  if (f.model != operator_model(kind)) throw InvalidInput("field model does not match operator " + to_string(kind));
  const ChartLayout& layout = f.layout;
  if (x.size() != layout.dim()) throw ShapeMismatch("apply_operator: point has the wrong chart dimension");
  if (h <= 0.0) h = second_step(x);
  require_margin(f.model, layout, x, 4.0 * h);
  const SecondOrderSymbol s = operator_symbol(kind, layout, x, params, tr);
  const cdouble v = apply_symbol(s, layout, fd_hessian(f, x, h));
  if (std::abs(v.imag()) > kOperatorRealness * (1.0 + std::abs(v.real())))
    throw NumericalDefect(to_string(kind) + ": operator value has a non-negligible imaginary part");
  return v.real();
}

double lap_siegel(const ScalarField& f, const CMatrix& omega) {
  const CMatrix none(0, omega.rows());
  return apply_operator(OperatorKind::siegel, f, to_chart(omega, none));
}

double lap_upper(const ScalarField& f, const UpperPoint& p, const MetricParams& params, Transcription tr) {
  return apply_operator(OperatorKind::upper, f, to_chart(p.omega, p.z), params, tr);
}

double lap_disk_n(const ScalarField& f, const CMatrix& w) {
  const CMatrix none(0, w.rows());
  return apply_operator(OperatorKind::disk_n, f, to_chart(w, none));
}

double lap_disk(const ScalarField& f, const DiskPoint& p, const MetricParams& params, Transcription tr) {
  return apply_operator(OperatorKind::disk, f, to_chart(p.w, p.eta), params, tr);
}

double op_invariant(OperatorKind kind, const ScalarField& f, std::span<const double> x, Transcription tr) {
  return apply_operator(kind, f, x, {}, tr);
}

}  // namespace sjgeo
