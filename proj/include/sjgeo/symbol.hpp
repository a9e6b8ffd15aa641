#pragma once

// Matrices of first-order Wirtinger operators with constant (frozen-point)
// coefficients, and the second-order symbols obtained from trace
// contractions σ(P·Q) of two such matrices.
//
// Symbol index s < N is ∂/∂z_s and s ≥ N is ∂/∂z̄_{s−N}, where z_s runs over
// the complex chart coordinates (ω_{μν} for μ ≤ ν, then z_{kl} row-major).

#include "sjgeo/chart.hpp"
#include "sjgeo/cmatrix.hpp"

namespace sjgeo {

class FirstOrderMatrix {
 public:
  FirstOrderMatrix(std::size_t rows, std::size_t cols, std::size_t symbols)
      : rows_(rows), cols_(cols), symbols_(symbols), c_(rows * cols * symbols) {}

  /// ∂/∂Ω (or ∂/∂W): n×n with weights (1 + δ_{μν})/2 on the coordinate ω_{μν}.
  static FirstOrderMatrix d_mat(const ChartLayout& layout, bool conjugate);
  /// ∂/∂Z (or ∂/∂η): n×m, entry (l, k) = ∂/∂z_{kl}.
  static FirstOrderMatrix d_vec(const ChartLayout& layout, bool conjugate);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t symbols() const { return symbols_; }

  cdouble& at(std::size_t i, std::size_t j, std::size_t s) { return c_[(i * cols_ + j) * symbols_ + s]; }
  cdouble at(std::size_t i, std::size_t j, std::size_t s) const { return c_[(i * cols_ + j) * symbols_ + s]; }

  FirstOrderMatrix& operator+=(const FirstOrderMatrix& o);
  FirstOrderMatrix& operator-=(const FirstOrderMatrix& o);
  FirstOrderMatrix& operator*=(cdouble s);

 private:
  std::size_t rows_, cols_, symbols_;
  std::vector<cdouble> c_;
};

FirstOrderMatrix operator+(FirstOrderMatrix a, const FirstOrderMatrix& b);
FirstOrderMatrix operator-(FirstOrderMatrix a, const FirstOrderMatrix& b);
FirstOrderMatrix operator*(const CMatrix& m, const FirstOrderMatrix& o);
FirstOrderMatrix operator*(const FirstOrderMatrix& o, const CMatrix& m);
FirstOrderMatrix transpose(const FirstOrderMatrix& o);
/// ½(O + ᵗO).
FirstOrderMatrix symmetrize(const FirstOrderMatrix& o);

/// Σ F_st ∂_s ∂_t as a 2N × 2N coefficient matrix.
struct SecondOrderSymbol {
  CMatrix f;
};

/// The symbol of σ(P·Q): F_st = Σ_{i,k} P_ik,s Q_ki,t.
SecondOrderSymbol trace_product(const FirstOrderMatrix& p, const FirstOrderMatrix& q);
SecondOrderSymbol operator+(const SecondOrderSymbol& a, const SecondOrderSymbol& b);
SecondOrderSymbol operator-(const SecondOrderSymbol& a, const SecondOrderSymbol& b);
SecondOrderSymbol operator*(double s, const SecondOrderSymbol& a);

/// Rows of L map real chart derivatives to Wirtinger derivatives:
/// ∂_c = ½(∂_{x_c} − i∂_{y_c}), ∂̄_c = ½(∂_{x_c} + i∂_{y_c}).
CMatrix wirtinger_transform(const ChartLayout& layout);

/// ᵗL F L: the coefficient matrix of the symbol against real second
/// derivatives ∂²/∂x_a∂x_b. For a real operator it is real; `imag_defect`
/// receives the largest imaginary entry of the symmetrized matrix.
RMatrix real_coefficients(const SecondOrderSymbol& s, const ChartLayout& layout, double* imag_defect = nullptr);

}  // namespace sjgeo
