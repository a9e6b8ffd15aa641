#include "sjgeo/symbol.hpp"

namespace sjgeo {

FirstOrderMatrix FirstOrderMatrix::d_mat(const ChartLayout& layout, bool conjugate) {
  const std::size_t big_n = layout.complex_dim();
  FirstOrderMatrix out(layout.n, layout.n, 2 * big_n);
  const auto pairs = symmetric_pairs(layout.n);
  for (std::size_t c = 0; c < pairs.size(); ++c) {
    const auto [a, b] = pairs[c];
    const double weight = a == b ? 1.0 : 0.5;
    const std::size_t s = conjugate ? big_n + c : c;
    out.at(a, b, s) = weight;
    out.at(b, a, s) = weight;
  }
  return out;
}

FirstOrderMatrix FirstOrderMatrix::d_vec(const ChartLayout& layout, bool conjugate) {
  const std::size_t big_n = layout.complex_dim();
  FirstOrderMatrix out(layout.n, layout.m, 2 * big_n);
  for (std::size_t k = 0; k < layout.m; ++k)
    for (std::size_t l = 0; l < layout.n; ++l) {
      const std::size_t c = layout.pairs() + k * layout.n + l;
      out.at(l, k, conjugate ? big_n + c : c) = 1.0;
    }
  return out;
}

FirstOrderMatrix& FirstOrderMatrix::operator+=(const FirstOrderMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_ || symbols_ != o.symbols_) throw ShapeMismatch("symbol +=: shapes differ");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
  return *this;
}

FirstOrderMatrix& FirstOrderMatrix::operator-=(const FirstOrderMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_ || symbols_ != o.symbols_) throw ShapeMismatch("symbol -=: shapes differ");
  for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
  return *this;
}

FirstOrderMatrix& FirstOrderMatrix::operator*=(cdouble s) {
  for (auto& x : c_) x *= s;
  return *this;
}

FirstOrderMatrix operator+(FirstOrderMatrix a, const FirstOrderMatrix& b) { return a += b; }
FirstOrderMatrix operator-(FirstOrderMatrix a, const FirstOrderMatrix& b) { return a -= b; }

FirstOrderMatrix operator*(const CMatrix& m, const FirstOrderMatrix& o) {
  if (m.cols() != o.rows()) throw ShapeMismatch("matrix * symbol: inner dimensions differ");
  FirstOrderMatrix out(m.rows(), o.cols(), o.symbols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t k = 0; k < m.cols(); ++k) {
      const cdouble mik = m(i, k);
      if (mik == cdouble{}) continue;
      for (std::size_t j = 0; j < o.cols(); ++j)
        for (std::size_t s = 0; s < o.symbols(); ++s) out.at(i, j, s) += mik * o.at(k, j, s);
    }
  return out;
}

FirstOrderMatrix operator*(const FirstOrderMatrix& o, const CMatrix& m) {
  if (o.cols() != m.rows()) throw ShapeMismatch("symbol * matrix: inner dimensions differ");
  FirstOrderMatrix out(o.rows(), m.cols(), o.symbols());
  for (std::size_t i = 0; i < o.rows(); ++i)
    for (std::size_t k = 0; k < o.cols(); ++k)
      for (std::size_t j = 0; j < m.cols(); ++j) {
        const cdouble mkj = m(k, j);
        if (mkj == cdouble{}) continue;
        for (std::size_t s = 0; s < o.symbols(); ++s) out.at(i, j, s) += o.at(i, k, s) * mkj;
      }
  return out;
}

FirstOrderMatrix transpose(const FirstOrderMatrix& o) {
  FirstOrderMatrix out(o.cols(), o.rows(), o.symbols());
  for (std::size_t i = 0; i < o.rows(); ++i)
    for (std::size_t j = 0; j < o.cols(); ++j)
      for (std::size_t s = 0; s < o.symbols(); ++s) out.at(j, i, s) = o.at(i, j, s);
  return out;
}

FirstOrderMatrix symmetrize(const FirstOrderMatrix& o) {
  FirstOrderMatrix out = o + transpose(o);
  return out *= 0.5;
}

SecondOrderSymbol trace_product(const FirstOrderMatrix& p, const FirstOrderMatrix& q) {
  if (p.cols() != q.rows() || p.rows() != q.cols() || p.symbols() != q.symbols())
    throw ShapeMismatch("trace_product: shapes do not conform");
  const std::size_t ns = p.symbols();
  CMatrix f(ns, ns);
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t k = 0; k < p.cols(); ++k)
      for (std::size_t s = 0; s < ns; ++s) {
        const cdouble ps = p.at(i, k, s);
        if (ps == cdouble{}) continue;
        for (std::size_t t = 0; t < ns; ++t) f(s, t) += ps * q.at(k, i, t);
      }
  return {std::move(f)};
}

SecondOrderSymbol operator+(const SecondOrderSymbol& a, const SecondOrderSymbol& b) { return {a.f + b.f}; }
SecondOrderSymbol operator-(const SecondOrderSymbol& a, const SecondOrderSymbol& b) { return {a.f - b.f}; }
SecondOrderSymbol operator*(double s, const SecondOrderSymbol& a) { return {a.f * cdouble(s)}; }

CMatrix wirtinger_transform(const ChartLayout& layout) {
  const std::size_t big_n = layout.complex_dim();
  CMatrix l(2 * big_n, layout.dim());
  for (std::size_t c = 0; c < big_n; ++c) {
    l(c, layout.re_index(c)) = 0.5;
    l(c, layout.im_index(c)) = cdouble(0.0, -0.5);
    l(big_n + c, layout.re_index(c)) = 0.5;
    l(big_n + c, layout.im_index(c)) = cdouble(0.0, 0.5);
  }
  return l;
}

RMatrix real_coefficients(const SecondOrderSymbol& s, const ChartLayout& layout, double* imag_defect) {
  const CMatrix l = wirtinger_transform(layout);
  const CMatrix c = symmetrize(transpose(l) * s.f * l);
  if (imag_defect) *imag_defect = max_abs(imag_part(c));
  return real_part(c);
}

}  // namespace sjgeo
