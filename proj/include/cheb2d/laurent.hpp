#pragma once

#include <vector>

#include "cheb2d/linalg.hpp"

namespace cheb2d {

struct MatrixPolynomial;

/// Finitely supported matrix Laurent polynomial sum_k C_k z^k.
class LaurentMatrixPolynomial {
 public:
  LaurentMatrixPolynomial() = default;
  /// Zero polynomial with (rows x cols) coefficients.
  LaurentMatrixPolynomial(int rows, int cols);
  LaurentMatrixPolynomial(int low_power, std::vector<CMatrix> coeffs);

  static LaurentMatrixPolynomial constant(const CMatrix& c);
  static LaurentMatrixPolynomial monomial(const CMatrix& c, int power);

  /// p(x) with x = (z + 1/z) / 2 substituted.
  static LaurentMatrixPolynomial from_joukowski(const MatrixPolynomial& p);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int low_power() const { return low_; }
  int high_power() const { return low_ + static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }

  /// Coefficient of z^k (zero outside the support).
  CMatrix coefficient(int k) const;
  CMatrix eval(cplx z) const;

  LaurentMatrixPolynomial shifted(int k) const;  // times z^k
  LaurentMatrixPolynomial transposed() const;
  /// p(1/z).
  LaurentMatrixPolynomial reflected() const;
  /// Drops leading/trailing coefficients with max |entry| <= tol.
  LaurentMatrixPolynomial trimmed(double tol = 0.0) const;

  LaurentMatrixPolynomial operator+(const LaurentMatrixPolynomial& o) const;
  LaurentMatrixPolynomial operator-(const LaurentMatrixPolynomial& o) const;
  LaurentMatrixPolynomial operator*(const LaurentMatrixPolynomial& o) const;
  LaurentMatrixPolynomial operator*(cplx s) const;
  friend LaurentMatrixPolynomial operator*(const CMatrix& m,
                                           const LaurentMatrixPolynomial& p);

 private:
  int rows_ = 0;
  int cols_ = 0;
  int low_ = 0;
  std::vector<CMatrix> c_;
};

/// Recovers the Laurent coefficients of powers [low, high] from samples of a
/// matrix function on the unit circle (discrete Fourier transform on
/// high - low + 1 roots of unity).
template <typename F>
LaurentMatrixPolynomial laurent_interpolate(F&& f, int low, int high);

}  // namespace cheb2d

#include "cheb2d/laurent_impl.hpp"
