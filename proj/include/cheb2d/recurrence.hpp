#pragma once

// Block Jacobi operators x P_n = A_{n+1} P_{n+1} + B_n P_n + A_n^t P_{n-1}
// for the shipped families, and the matrix / vector polynomials they
// generate.

#include <vector>

#include "cheb2d/linalg.hpp"
#include "cheb2d/parameters.hpp"

namespace cheb2d {

/// Block Jacobi operator with (m+1)x(m+1) coefficients and a free tail:
/// A_n = I/2 and B_{n-1} = 0 for every n >= tail_index().
///
/// A_0 = I by convention. `y_basis()` holds the coefficients (rows, in
/// 1, y, ..., y^m) of the y-line orthonormal polynomials P_{0,m}(y); the
/// bivariate vector polynomial is P_n(x) * y_basis() * [1, y, ..., y^m]^t.
class JacobiOperator {
 public:
  /// `a_prefix[k]` is A_{k+1}, `b_prefix[k]` is B_k; everything past the
  /// prefixes is free.
  JacobiOperator(int m, std::vector<Matrix> a_prefix,
                 std::vector<Matrix> b_prefix, Matrix y_basis);

  int m() const { return m_; }
  int block() const { return m_ + 1; }
  int tail_index() const { return tail_index_; }

  const Matrix& A(int n) const;
  const Matrix& B(int n) const;
  const Matrix& y_basis() const { return y_basis_; }

 private:
  int m_;
  std::vector<Matrix> a_;  // a_[n] = A_n, a_[0] = I
  std::vector<Matrix> b_;  // b_[n] = B_n
  Matrix half_identity_;
  Matrix zero_;
  Matrix y_basis_;
  int tail_index_ = 1;
};

JacobiOperator jacobi_operator(const DeformationFamily& family, int m);

/// Coefficients (rows) of the orthonormal polynomials q_0..q_m for a
/// one-variable Jacobi matrix with off-diagonals a_1.. and diagonal b_0..
Matrix line_basis(const LineJacobi& line, int m);

/// P_0..P_nmax at x (real or complex).
std::vector<Matrix> eval_matrix_polys(const JacobiOperator& op, int nmax,
                                      double x);
std::vector<CMatrix> eval_matrix_polys(const JacobiOperator& op, int nmax,
                                       cplx x);

/// Matrix polynomial sum_k coeffs[k] x^k.
struct MatrixPolynomial {
  std::vector<Matrix> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  const Matrix& leading() const { return coeffs.back(); }
  Matrix eval(double x) const;
  CMatrix eval(cplx x) const;
};

/// P_0..P_nmax as coefficient lists in x.
std::vector<MatrixPolynomial> matrix_poly_coefficients(
    const JacobiOperator& op, int nmax);

struct VectorPolynomialValue {
  int n = 0;
  int m = 0;
  Vector value;
};

/// The column (p^0_{n,m}, ..., p^m_{n,m})(x, y).
VectorPolynomialValue eval_vector_poly(const JacobiOperator& op, int n,
                                       double x, double y);

/// Monomial coefficients of the vector polynomial of level n: entry a of the
/// result is the (m+1)x(m+1) matrix whose (l, k) entry multiplies x^a y^k in
/// p^l_{n,m}.
std::vector<Matrix> vector_poly_monomial_blocks(const JacobiOperator& op,
                                                int n);

/// y-direction recurrence of the slice measure at fixed x (one_param only).
struct SliceCoefficients {
  double a = 0.0;  // a^x_m
  double b = 0.0;  // b^x_{m-1}
};
SliceCoefficients parametric_slice_coeffs(const DeformationFamily& family,
                                          double x, int m);

/// psi^x_m(w) for the one-parameter family; w^m psi^x_m(w) does not depend
/// on m >= 1.
cplx parametric_psi(const DeformationFamily& family, double x, int m, cplx w);

/// Total-degree recurrence matrices (conjectured closed forms).
struct TotalDegreeCoefficients {
  int n = 0;
  Matrix Ax;  // (n+1) x (n+2)
  Matrix Ay;
  Matrix Bx;  // (n+1) x (n+1)
  Matrix By;
};
TotalDegreeCoefficients total_degree_coeffs(const DeformationFamily& family,
                                            int n);

}  // namespace cheb2d
