#pragma once

// Independent constructions used to cross-check the recurrence module:
// Gram-Schmidt on moment tables, lex-step coefficient extraction and
// the phi identities of the one-parameter family.

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cheb2d/bipoly.hpp"
#include "cheb2d/measures.hpp"
#include "cheb2d/recurrence.hpp"

namespace cheb2d {

/// P_{0,m} .. P_{n,m} from the Cholesky factor of H_{n,m}.
std::vector<VectorPolynomial> gram_schmidt_lex(const DoublyHankel& H);

std::vector<VectorPolynomial> lex_polynomials(const Matrix& h, int n, int m);

/// Reverse-lex polynomials P~_{n,0} .. P~_{n,m}, each with n+1 components.
/// Obtained by lex Gram-Schmidt on the transposed table, variables swapped.
std::vector<VectorPolynomial> tilde_polynomials(const Matrix& h, int n, int m);

/// P_{0,m} .. P_{nmax,m} from the block recurrence, in monomials.
std::vector<VectorPolynomial> recurrence_polynomials(const JacobiOperator& op,
                                                     int nmax);

struct Thm22Coefficients {
  int n = 0;
  int m = 0;
  Matrix A;       // A_{n,m}
  Matrix A_next;  // A_{n+1,m}
  Matrix B;
  Matrix J1, J2, J3;
  Matrix Gamma;
  Matrix K;
  Matrix I;
  Matrix A_tilde;  // <y P~_{n-1,m-1}, P~_{n-1,m}>
};

/// Moment-table size needed by thm22_coefficients at (n, m).
std::pair<int, int> thm22_moment_orders(int n, int m);

Thm22Coefficients thm22_coefficients(const Matrix& h, int n, int m);
Thm22Coefficients thm22_coefficients(const BivariateMeasure& mu, int n, int m,
                                     int nodes);

/// Max residual of each lex recurrence identity at `samples` seeded points.
std::map<std::string, double> residuals_recurrences(
    const Matrix& h, const Thm22Coefficients& c, std::uint64_t seed,
    int samples);

struct TotalDegreeBasis {
  std::vector<VectorPolynomial> P;  // P[d] has d+1 components
};

/// Gram-Schmidt on 1, y, x, y^2, xy, x^2, ...
TotalDegreeBasis gram_schmidt_totaldeg(const Matrix& h, int nmax);

/// Ax, Ay, Bx, By at degree n read off the basis by inner products.
TotalDegreeCoefficients extract_total_degree(const Matrix& h,
                                             const TotalDegreeBasis& basis,
                                             int n);

struct PhiSample {
  cplx z;
  double y;
};
std::vector<PhiSample> phi_samples(int count, std::uint64_t seed);

/// Residuals of the phi identities of the one-parameter family at level m.
std::map<std::string, double> phi_identity_check(
    double s11, int m, const std::vector<PhiSample>& samples);

/// Chebyshev polynomials of the second kind U_0..U_n at y.
Vector chebyshev_u(int n, double y);

}  // namespace cheb2d
