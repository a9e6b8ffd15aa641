#include "sjgeo/cmatrix.hpp"

#include <numeric>

namespace sjgeo {

CMatrix conj(const CMatrix& a) {
  CMatrix out(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) out.data()[k] = std::conj(a.data()[k]);
  return out;
}

CMatrix adjoint(const CMatrix& a) { return transpose(conj(a)); }

RMatrix real_part(const CMatrix& a) {
  RMatrix out(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) out.data()[k] = a.data()[k].real();
  return out;
}

RMatrix imag_part(const CMatrix& a) {
  RMatrix out(a.rows(), a.cols());
  for (std::size_t k = 0; k < a.size(); ++k) out.data()[k] = a.data()[k].imag();
  return out;
}

CMatrix complexify(const RMatrix& re) {
  CMatrix out(re.rows(), re.cols());
  for (std::size_t k = 0; k < re.size(); ++k) out.data()[k] = re.data()[k];
  return out;
}

CMatrix complexify(const RMatrix& re, const RMatrix& im) {
  if (!re.same_shape(im)) throw ShapeMismatch("complexify: real and imaginary shapes differ");
  CMatrix out(re.rows(), re.cols());
  for (std::size_t k = 0; k < re.size(); ++k) out.data()[k] = cdouble(re.data()[k], im.data()[k]);
  return out;
}

namespace {

template <class T>
Matrix<T> lu_inverse(const Matrix<T>& m) {
  if (!m.square()) throw ShapeMismatch("inverse: matrix is not square");
  const std::size_t n = m.rows();
  const double threshold = 1e-12 * max_abs(m);
  Matrix<T> a = m;
  Matrix<T> inv = Matrix<T>::identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    double best = std::abs(a(col, col));
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(a(r, col)) > best) {
        best = std::abs(a(r, col));
        piv = r;
      }
    }
    if (!(best > threshold)) throw SingularMatrix("inverse: pivot below 1e-12 relative threshold");
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(col, j), a(piv, j));
        std::swap(inv(col, j), inv(piv, j));
      }
    }
    const T d = T{1} / a(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      a(col, j) *= d;
      inv(col, j) *= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const T f = a(r, col);
      if (f == T{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

}  // namespace

CMatrix inverse(const CMatrix& m) { return lu_inverse(m); }
RMatrix inverse(const RMatrix& m) { return lu_inverse(m); }

double determinant(const RMatrix& m) {
  if (!m.square()) throw ShapeMismatch("determinant: matrix is not square");
  RMatrix a = m;
  const std::size_t n = a.rows();
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (a(piv, col) == 0.0) return 0.0;
    if (piv != col) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      for (std::size_t j = col; j < n; ++j) a(r, j) -= f * a(col, j);
    }
  }
  return det;
}

cdouble trace(const CMatrix& m) {
  if (!m.square()) throw ShapeMismatch("trace: matrix is not square");
  cdouble s{};
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

double trace(const RMatrix& m) {
  if (!m.square()) throw ShapeMismatch("trace: matrix is not square");
  double s = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i) s += m(i, i);
  return s;
}

CMatrix bracket_form(const CMatrix& a, const CMatrix& b) {
  if (!a.square() || a.cols() != b.rows()) throw ShapeMismatch("bracket_form: shapes do not conform");
  return transpose(b) * a * b;
}

std::vector<double> symmetric_eigenvalues(const RMatrix& s) {
  if (!s.square()) throw ShapeMismatch("symmetric_eigenvalues: matrix is not square");
  const std::size_t n = s.rows();
  RMatrix a = symmetrize(s);
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    if (off <= 1e-30 * std::max(1.0, max_abs(a) * max_abs(a))) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0.0) continue;
        // Classical Jacobi rotation zeroing a(p,q).
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double sn = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - sn * akq;
          a(k, q) = sn * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - sn * aqk;
          a(q, k) = sn * apk + c * aqk;
        }
      }
    }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

std::vector<double> hermitian_eigenvalues(const CMatrix& m) {
  if (!m.square()) throw ShapeMismatch("hermitian_eigenvalues: matrix is not square");
  const std::size_t n = m.rows();
  CMatrix h = m + adjoint(m);
  h *= cdouble(0.5);
  // Real embedding [[Re, -Im], [Im, Re]]; every eigenvalue appears twice.
  RMatrix e(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      e(i, j) = e(n + i, n + j) = h(i, j).real();
      e(n + i, j) = h(i, j).imag();
      e(i, n + j) = -h(i, j).imag();
    }
  const auto doubled = symmetric_eigenvalues(e);
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = 0.5 * (doubled[2 * i] + doubled[2 * i + 1]);
  return ev;
}

double min_hermitian_eigenvalue(const CMatrix& m) { return hermitian_eigenvalues(m).front(); }

bool is_hermitian_pd(const CMatrix& m, double tol) {
  if (!m.square()) throw ShapeMismatch("is_hermitian_pd: matrix is not square");
  if (!all_finite(m)) return false;
  if (max_abs_diff(m, adjoint(m)) > tol) return false;
  return min_hermitian_eigenvalue(m) > tol;
}

double frobenius_norm(const CMatrix& m) {
  double s = 0.0;
  for (const auto& x : m.data()) s += std::norm(x);
  return std::sqrt(s);
}

}  // namespace sjgeo
