#pragma once

// Small dense blocks: the (m+1)x(m+1) coefficient matrices of the block
// recurrences, plus the factorizations the rest of the library leans on.

#include <Eigen/Dense>

#include <cmath>
#include <complex>

#include "cheb2d/errors.hpp"

namespace cheb2d {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXd;
using CMatrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXd;
using CVector = Eigen::VectorXcd;

/// Lower Cholesky factor L (positive diagonal) with L L^t = a.
///
/// Throws NotPositiveDefinite when a pivot falls below
/// `rel_tol * max_i a(i,i)`.
Matrix cholesky_lower(const Matrix& a, double rel_tol = 1e-12);

/// Lower triangular L (positive diagonal) with L^t L = a. This is the
/// "reversed" Cholesky factor; it fixes normalizations where the unknown
/// sits on the left of a Gram matrix.
Matrix reverse_cholesky_lower(const Matrix& a, double rel_tol = 1e-12);

/// Forward substitution for l X = b. Throws SingularMatrix when a diagonal
/// entry has magnitude <= 1e-14.
Matrix solve_lower_triangular(const Matrix& l, const Matrix& b);
CMatrix solve_lower_triangular(const CMatrix& l, const CMatrix& b);

/// Hilbert-Schmidt norm sqrt(tr(B B^dagger)).
template <typename Derived>
double hs_norm(const Eigen::MatrixBase<Derived>& a) {
  double acc = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) acc += std::norm(a(i, j));
  return std::sqrt(acc);
}

/// Largest singular value.
double operator_norm(const Matrix& a);

bool is_lower_triangular(const Matrix& a, double tol = 0.0);
bool is_symmetric(const Matrix& a, double tol = 0.0);

/// Max absolute entry; 0 for an empty matrix.
template <typename Derived>
double max_abs(const Eigen::MatrixBase<Derived>& a) {
  return a.size() == 0 ? 0.0 : a.cwiseAbs().maxCoeff();
}

}  // namespace cheb2d
