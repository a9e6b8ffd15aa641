#include "sjgeo/fields.hpp"

#include <cmath>

namespace sjgeo {

double ScalarField::operator()(std::span<const double> x) const {
  CMatrix mat, vec;
  from_chart(layout, x, mat, vec);
  return rule(mat, vec);
}

const std::vector<std::string>& field_ids() {
  static const std::vector<std::string> ids{"const", "lin", "quad", "absW2", "absEta2", "gauss", "prod", "logdet"};
  return ids;
}

namespace {

double re_trace(const CMatrix& m) { return trace(m).real(); }

double log_det_hermitian_pd(const CMatrix& m) {
  double s = 0.0;
  for (double ev : hermitian_eigenvalues(m)) {
    if (!(ev > 0.0)) throw DomainMargin("logdet field evaluated outside the domain");
    s += std::log(ev);
  }
  return s;
}

RVector random_center(Model model, const ChartLayout& layout, Rng& rng) {
  if (model == Model::disk) {
    const DiskPoint p = random_disk_point(layout.n, layout.m, rng);
    return to_chart(p.w, p.eta);
  }
  const UpperPoint p = random_upper_point(layout.n, layout.m, rng);
  return to_chart(p.omega, p.z);
}

}  // namespace

ScalarField make_field(const std::string& id, Model model, const ChartLayout& layout, std::uint64_t seed,
                       const std::optional<RVector>& center) {
  Rng rng(derive_seed(seed, 0x51e1d));
  ScalarField f{id, model, layout, {}};
  const std::size_t n = layout.n;

  if (id == "const") {
    f.rule = [](const CMatrix&, const CMatrix&) { return 1.0; };
  } else if (id == "lin") {
    RVector c(layout.dim());
    for (auto& v : c) v = rng.uniform(-1.0, 1.0);
    f.rule = [c, layout](const CMatrix& mat, const CMatrix& vec) {
      const RVector x = to_chart(mat, vec);
      double s = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) s += c[i] * x[i];
      return s;
    };
  } else if (id == "quad") {
    if (model == Model::upper) {
      f.rule = [](const CMatrix& mat, const CMatrix& vec) {
        const RMatrix y = imag_part(mat), v = imag_part(vec);
        return trace(y * y) + trace(v * transpose(v));
      };
    } else {
      f.rule = [n](const CMatrix& mat, const CMatrix& vec) {
        return re_trace(CMatrix::identity(n) - conj(mat) * mat) + 0.5 * re_trace(vec * adjoint(vec));
      };
    }
  } else if (id == "absW2") {
    f.rule = [](const CMatrix& mat, const CMatrix&) { return re_trace(conj(mat) * mat); };
  } else if (id == "absEta2") {
    f.rule = [](const CMatrix&, const CMatrix& vec) { return re_trace(vec * adjoint(vec)); };
  } else if (id == "gauss") {
    const RVector c = center ? *center : random_center(model, layout, rng);
    if (c.size() != layout.dim()) throw ShapeMismatch("gauss field: centre has the wrong dimension");
    const double width = 2.0 * (1.0 + chart_scale(c) * chart_scale(c));
    f.rule = [c, width](const CMatrix& mat, const CMatrix& vec) {
      const RVector x = to_chart(mat, vec);
      double r2 = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) r2 += (x[i] - c[i]) * (x[i] - c[i]);
      return std::exp(-r2 / width);
    };
  } else if (id == "prod") {
    const CMatrix c0 = complexify(rng.real_symmetric(n, -1.0, 1.0));
    const CMatrix l0 = complexify(rng.real_matrix(layout.m, n, -1.0, 1.0));
    f.rule = [c0, l0](const CMatrix& mat, const CMatrix& vec) {
      return re_trace(mat) * (trace(mat * c0).imag() + trace(vec * transpose(l0)).imag());
    };
  } else if (id == "logdet") {
    if (model == Model::upper) {
      f.rule = [](const CMatrix& mat, const CMatrix&) { return log_det_hermitian_pd(complexify(imag_part(mat))); };
    } else {
      f.rule = [n](const CMatrix& mat, const CMatrix&) {
        return log_det_hermitian_pd(CMatrix::identity(n) - conj(mat) * mat);
      };
    }
  } else {
    throw InvalidInput("unknown field id '" + id + "'");
  }
  return f;
}

std::vector<ScalarField> test_field_suite(Model model, const ChartLayout& layout, std::uint64_t seed,
                                          const std::optional<RVector>& center) {
  std::vector<ScalarField> out;
  for (const auto& id : field_ids()) out.push_back(make_field(id, model, layout, seed, center));
  return out;
}

ScalarField compose(const ScalarField& f, const JacobiElement& g) {
  if (f.model != Model::upper) throw InvalidInput("compose: field is not on the upper model");
  ScalarField out = f;
  out.id = f.id + "∘g";
  const std::size_t m = f.layout.m;
  out.rule = [f, g, m](const CMatrix& mat, const CMatrix& vec) {
    if (m == 0) return f.rule(act_siegel(g.sp, mat), vec);
    const UpperPoint q = act_upper(g, {mat, vec});
    return f.rule(q.omega, q.z);
  };
  return out;
}

ScalarField compose(const ScalarField& f, const JacobiStarElement& g) {
  if (f.model != Model::disk) throw InvalidInput("compose: field is not on the disk model");
  ScalarField out = f;
  out.id = f.id + "∘g";
  const std::size_t m = f.layout.m;
  out.rule = [f, g, m](const CMatrix& mat, const CMatrix& vec) {
    if (m == 0) return f.rule(act_gstar(g.g, mat), vec);
    const DiskPoint q = act_disk(g, {mat, vec});
    return f.rule(q.w, q.eta);
  };
  return out;
}

}  // namespace sjgeo
