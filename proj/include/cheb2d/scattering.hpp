#pragma once

// Discrete scattering for block Jacobi operators with a free tail: Joukowski
// variable, Jost functions f_+/f_-, scattering solutions P^{+/-}, Wronskians,
// and reconstruction of the absolutely continuous matrix weight.

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cheb2d/laurent.hpp"
#include "cheb2d/recurrence.hpp"

namespace cheb2d {

/// x = (z + 1/z)/2 with |z| <= 1.
struct JoukowskiPoint {
  cplx x;
  cplx z;
};

/// Root of z^2 - 2xz + 1 = 0 in the closed unit disk; on [-1, 1] the upper
/// half circle is used (z = e^{i theta}, theta in [0, pi]).
JoukowskiPoint joukowski_z(cplx x);

inline cplx joukowski_x(cplx z) { return 0.5 * (z + 1.0 / z); }

/// Psi_n(z) = P_n(x) - 2 z A_n^t P_{n-1}(x).
CMatrix psi(const JacobiOperator& op, int n, cplx z);
/// Psi_n propagated from Psi_0 = I by the first-order recursion in z.
CMatrix psi_by_recursion(const JacobiOperator& op, int n, cplx z);
/// z^n Psi_n(z).
CMatrix psi_star(const JacobiOperator& op, int n, cplx z);

/// f_+(z) = Psi*_{n0}(z) / (2z) by symbolic substitution x = (z + 1/z)/2.
LaurentMatrixPolynomial jost_fplus(const JacobiOperator& op);
/// Same function recovered from circle samples of Psi*_{n0}.
LaurentMatrixPolynomial jost_fplus_interpolated(const JacobiOperator& op);
/// f_-(z) = f_+(1/z) as a Laurent polynomial.
LaurentMatrixPolynomial jost_fminus(const JacobiOperator& op);

struct AssumptionReport {
  bool pass = false;
  double min_abs_det = 0.0;
  int zero_count = 0;  // zeros of det(z f_+(z)) inside |z| < 1
};

/// Samples det(z f_+(z)) on the circles |z| = k/ngrid and counts zeros in
/// the open disk by the argument principle.
AssumptionReport check_assumtwo(const LaurentMatrixPolynomial& fplus,
                                int ngrid);

/// P^+_n and P^-_n for n = -1..nmax. The solutions equal z^{+-n} I past
/// the free tail and are continued downward by the recurrence.
struct ScatteringSequence {
  int nmax = 0;
  std::vector<CMatrix> values;  // values[n + 1] = P_n
  const CMatrix& operator[](int n) const { return values.at(n + 1); }
};
ScatteringSequence scattering_sequence(const JacobiOperator& op, int sign,
                                       cplx z, int nmax);

std::pair<CMatrix, CMatrix> scattering_solutions(const JacobiOperator& op,
                                                 int n, cplx z);

/// Solution sampler n -> X_n.
using SolutionSampler = std::function<CMatrix(int)>;

/// X_n^dagger A_{n+1} Y_{n+1} - X_{n+1}^dagger A_{n+1}^t Y_n; `x_conj`
/// returns X evaluated at conj(x).
CMatrix wronskian(const JacobiOperator& op, const SolutionSampler& x_conj,
                  const SolutionSampler& y, int n);

/// sigma_m(x) = sqrt(1-x^2)/(2 pi) (f_+^dagger f_+)^{-1} at z = e^{i theta}.
Matrix matrix_weight(const JacobiOperator& op, double x);
Matrix matrix_weight(const LaurentMatrixPolynomial& fplus, double x);

/// sigma_m divided by the Chebyshev-2 weight (2/pi) sqrt(1 - x^2).
Matrix matrix_weight_ratio(const LaurentMatrixPolynomial& fplus, double x);

struct IdentityResiduals {
  std::map<std::string, double> max_residual;
};

struct CircleCheckOptions {
  int nmax = 6;                   // P_n indices checked
  std::vector<double> fp_points;  // real z in (0,1) for the Cauchy check
  int fp_nodes = 1024;
};

/// Residuals of the unit-circle identities (jost, ff, fpfm, wronskian,
/// expanp) over `zsamples`, and of the Cauchy-transform relation (fp) at
/// `opts.fp_points`.
IdentityResiduals check_unit_circle_identities(const JacobiOperator& op,
                                               const std::vector<cplx>& zsamples,
                                               const CircleCheckOptions& opts);

/// `count` points on the unit circle, skipping 1e-3 neighbourhoods of +-1.
std::vector<cplx> circle_samples(int count);

}  // namespace cheb2d
