#pragma once

// Dense complex/real matrices for the small (at most 10x10) blocks that carry
// points, tangents and group elements.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sjgeo/errors.hpp"

namespace sjgeo {

using cdouble = std::complex<double>;

template <class T>
class Matrix {
 public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& row : rows) {
      if (row.size() != cols_) throw ShapeMismatch("ragged initializer list");
      data_.insert(data_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = T{1};
    return out;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }
  bool square() const noexcept { return rows_ == cols_; }
  bool same_shape(const Matrix& o) const noexcept { return rows_ == o.rows_ && cols_ == o.cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<T> data() noexcept { return data_; }
  std::span<const T> data() const noexcept { return data_; }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_) throw ShapeMismatch("block out of range");
    Matrix out(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) out(i, j) = (*this)(r0 + i, c0 + j);
    return out;
  }

  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw ShapeMismatch("set_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o, "+=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o, "-=");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(T s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  bool operator==(const Matrix&) const = default;

 private:
  void require_same_shape(const Matrix& o, const char* what) const {
    if (!same_shape(o)) throw ShapeMismatch(std::string("shape mismatch in ") + what);
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using CMatrix = Matrix<cdouble>;
using RMatrix = Matrix<double>;

template <class T>
Matrix<T> operator+(Matrix<T> a, const Matrix<T>& b) {
  return a += b;
}
template <class T>
Matrix<T> operator-(Matrix<T> a, const Matrix<T>& b) {
  return a -= b;
}
template <class T>
Matrix<T> operator-(Matrix<T> a) {
  return a *= T{-1};
}
template <class T>
Matrix<T> operator*(Matrix<T> a, T s) {
  return a *= s;
}
template <class T>
Matrix<T> operator*(T s, Matrix<T> a) {
  return a *= s;
}
inline CMatrix operator*(double s, CMatrix a) { return a *= cdouble(s); }
inline CMatrix operator*(CMatrix a, double s) { return a *= cdouble(s); }

template <class T>
Matrix<T> operator*(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw ShapeMismatch("matrix product: inner dimensions differ");
  Matrix<T> out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& a) {
  Matrix<T> out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

/// Largest entry magnitude (the max-norm used by every tolerance here).
template <class T>
double max_abs(const Matrix<T>& a) {
  double m = 0.0;
  for (const auto& x : a.data()) m = std::max(m, static_cast<double>(std::abs(x)));
  return m;
}

template <class T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
  if (!a.same_shape(b)) throw ShapeMismatch("max_abs_diff: shapes differ");
  double m = 0.0;
  for (std::size_t k = 0; k < a.size(); ++k)
    m = std::max(m, static_cast<double>(std::abs(a.data()[k] - b.data()[k])));
  return m;
}

/// ‖A − ᵗA‖_max.
template <class T>
double symmetry_defect(const Matrix<T>& a) {
  if (!a.square()) throw ShapeMismatch("symmetry_defect: not square");
  return max_abs_diff(a, transpose(a));
}

template <class T>
Matrix<T> symmetrize(const Matrix<T>& a) {
  Matrix<T> out = a + transpose(a);
  return out *= T{0.5};
}

template <class T>
bool all_finite(const Matrix<T>& a) {
  return std::all_of(a.data().begin(), a.data().end(), [](const T& x) {
    if constexpr (std::is_same_v<T, cdouble>)
      return std::isfinite(x.real()) && std::isfinite(x.imag());
    else
      return std::isfinite(x);
  });
}

CMatrix conj(const CMatrix& a);
CMatrix adjoint(const CMatrix& a);
RMatrix real_part(const CMatrix& a);
RMatrix imag_part(const CMatrix& a);
CMatrix complexify(const RMatrix& re);
CMatrix complexify(const RMatrix& re, const RMatrix& im);

/// LU with partial pivoting. Throws SingularMatrix when a pivot magnitude
/// drops below 1e-12·‖m‖_max.
CMatrix inverse(const CMatrix& m);
RMatrix inverse(const RMatrix& m);
inline CMatrix mat_inverse(const CMatrix& m) { return inverse(m); }

double determinant(const RMatrix& m);

cdouble trace(const CMatrix& m);
double trace(const RMatrix& m);

/// A[B] = ᵗB·A·B.
CMatrix bracket_form(const CMatrix& a, const CMatrix& b);

/// Eigenvalues of a real symmetric matrix (cyclic Jacobi), ascending.
std::vector<double> symmetric_eigenvalues(const RMatrix& s);

/// Eigenvalues of the Hermitian part ½(m + m*), ascending.
std::vector<double> hermitian_eigenvalues(const CMatrix& m);

double min_hermitian_eigenvalue(const CMatrix& m);

/// True iff ‖m − m*‖_max ≤ tol and the smallest eigenvalue of the Hermitian
/// part exceeds tol.
bool is_hermitian_pd(const CMatrix& m, double tol);

/// Largest singular value bound: the Frobenius norm.
double frobenius_norm(const CMatrix& m);

}  // namespace sjgeo
