#include "sjgeo/json_io.hpp"

namespace sjgeo {

namespace {

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InvalidInput(std::string("missing field '") + key + "'");
  return j.at(key);
}

std::size_t count_field(const json& j, const char* key) {
  const json& v = field(j, key);
  if (!v.is_number_integer() || v.get<long long>() < 0)
    throw InvalidInput(std::string("field '") + key + "' must be a non-negative integer");
  return v.get<std::size_t>();
}

void require_shape(const CMatrix& m, std::size_t r, std::size_t c, const char* what) {
  if (m.rows() != r || m.cols() != c)
    throw InvalidInput(std::string(what) + " has shape " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
                       ", expected " + std::to_string(r) + "x" + std::to_string(c));
}

}  // namespace

json matrix_to_json(const CMatrix& m) {
  json data = json::array();
  for (const auto& x : m.data()) data.push_back({x.real(), x.imag()});
  return {{"rows", m.rows()}, {"cols", m.cols()}, {"data", std::move(data)}};
}

json matrix_to_json(const RMatrix& m) { return matrix_to_json(complexify(m)); }

CMatrix cmatrix_from_json(const json& j) {
  const std::size_t r = count_field(j, "rows"), c = count_field(j, "cols");
  const json& data = field(j, "data");
  if (!data.is_array() || data.size() != r * c) throw InvalidInput("matrix data must hold rows*cols entries");
  CMatrix m(r, c);
  for (std::size_t k = 0; k < data.size(); ++k) {
    const json& e = data[k];
    if (e.is_number()) {
      m.data()[k] = e.get<double>();
    } else if (e.is_array() && e.size() == 2 && e[0].is_number() && e[1].is_number()) {
      m.data()[k] = cdouble(e[0].get<double>(), e[1].get<double>());
    } else {
      throw InvalidInput("matrix entries must be [re, im] pairs");
    }
  }
  if (!all_finite(m)) throw InvalidInput("matrix entries must be finite");
  return m;
}

RMatrix rmatrix_from_json(const json& j) {
  const CMatrix c = cmatrix_from_json(j);
  if (max_abs(imag_part(c)) != 0.0) throw InvalidInput("expected a real matrix");
  return real_part(c);
}

json to_json(const UpperPoint& p) {
  return {{"model", "upper"}, {"n", p.n()}, {"m", p.m()}, {"omega", matrix_to_json(p.omega)}, {"z", matrix_to_json(p.z)}};
}

json to_json(const DiskPoint& p) {
  return {{"model", "disk"}, {"n", p.n()}, {"m", p.m()}, {"w", matrix_to_json(p.w)}, {"eta", matrix_to_json(p.eta)}};
}

json to_json(const Tangent& t) {
  return {{"model", to_string(t.model)}, {"dmat", matrix_to_json(t.dmat)}, {"dvec", matrix_to_json(t.dvec)}};
}

json to_json(const JacobiElement& g) {
  return {{"kind", "jacobi"},
          {"n", g.n()},
          {"m", g.m()},
          {"sp", {{"a", matrix_to_json(g.sp.a)}, {"b", matrix_to_json(g.sp.b)}, {"c", matrix_to_json(g.sp.c)},
                  {"d", matrix_to_json(g.sp.d)}}},
          {"h", {{"lambda", matrix_to_json(g.h.lambda)}, {"mu", matrix_to_json(g.h.mu)}, {"kappa", matrix_to_json(g.h.kappa)}}}};
}

json to_json(const JacobiStarElement& g) {
  return {{"kind", "jacobistar"},
          {"n", g.n()},
          {"m", g.m()},
          {"g", {{"p", matrix_to_json(g.g.p)}, {"q", matrix_to_json(g.g.q)}}},
          {"xi", matrix_to_json(g.xi)},
          {"kappa", matrix_to_json(g.kappa)}};
}

json to_json(const MetricTensor& t) {
  json rows = json::array();
  for (std::size_t i = 0; i < t.g.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < t.g.cols(); ++j) row.push_back(t.g(i, j));
    rows.push_back(std::move(row));
  }
  return {{"dim", t.dim}, {"ordering", t.ordering}, {"g", std::move(rows)}};
}

Model point_model(const json& j) {
  const json& m = field(j, "model");
  if (!m.is_string()) throw InvalidInput("field 'model' must be a string");
  return model_from_string(m.get<std::string>());
}

UpperPoint upper_point_from_json(const json& j) {
  if (point_model(j) != Model::upper) throw InvalidInput("expected an upper-model point");
  const std::size_t n = count_field(j, "n"), m = count_field(j, "m");
  UpperPoint p{cmatrix_from_json(field(j, "omega")), cmatrix_from_json(field(j, "z"))};
  require_shape(p.omega, n, n, "omega");
  require_shape(p.z, m, n, "z");
  return p;
}

DiskPoint disk_point_from_json(const json& j) {
  if (point_model(j) != Model::disk) throw InvalidInput("expected a disk-model point");
  const std::size_t n = count_field(j, "n"), m = count_field(j, "m");
  DiskPoint p{cmatrix_from_json(field(j, "w")), cmatrix_from_json(field(j, "eta"))};
  require_shape(p.w, n, n, "w");
  require_shape(p.eta, m, n, "eta");
  return p;
}

Tangent tangent_from_json(const json& j) {
  Tangent t;
  t.model = point_model(j);
  t.dmat = cmatrix_from_json(field(j, "dmat"));
  t.dvec = cmatrix_from_json(field(j, "dvec"));
  return t;
}

}  // namespace sjgeo
