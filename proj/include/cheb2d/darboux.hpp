#pragma once

// Adding a mass point at x0 = (z0 + 1/z0)/2 by a Darboux transformation
// L - x0 = PQ  ->  L^ - x0 = QP.

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "cheb2d/laurent.hpp"
#include "cheb2d/recurrence.hpp"

namespace cheb2d {

struct DarbouxConfig {
  double z0 = 0.5;
  double x0 = 1.25;

  static DarbouxConfig from_z0(double z0);
  /// z0 = 1/(2 s10), the choice linking the two deformations.
  static DarbouxConfig from_s10(double s10);
};

/// Q_{-1}..Q_{nmax}; values[n + 1] = Q_n.
struct QSequence {
  std::vector<Matrix> values;
  const Matrix& operator[](int n) const { return values.at(n + 1); }
  int nmax() const { return static_cast<int>(values.size()) - 2; }
};

QSequence q_sequence(const JacobiOperator& op, const DarbouxConfig& cfg,
                     int nmax);

struct HatMeasure {
  DarbouxConfig cfg;
  LaurentMatrixPolynomial fplus;
  Matrix mass;                   // r^ at x0
  double extension_gap = 0.0;    // |f_+(1/z0) - f_-(z0)|, should vanish
  double min_mass_eigenvalue = 0.0;
  bool admissible = false;       // mass and density positive semidefinite

  /// sigma(x) / (2 z0 (x0 - x)) on (-1, 1).
  Matrix density(double x) const;
  /// density divided by (2/pi) sqrt(1 - x^2).
  Matrix density_ratio(double x) const;
};

HatMeasure hat_measure(const JacobiOperator& op, const DarbouxConfig& cfg);

/// d_0..d_{nmax}, with d_n Q_{n-1}^t lower triangular.
std::vector<Matrix> dn_constants(const JacobiOperator& op,
                                 const DarbouxConfig& cfg, int nmax);

std::vector<Matrix> hat_polynomials(const JacobiOperator& op,
                                    const DarbouxConfig& cfg, int nmax,
                                    double x);

std::vector<MatrixPolynomial> hat_polynomial_coefficients(
    const JacobiOperator& op, const DarbouxConfig& cfg, int nmax);

using MatrixSequence = std::vector<Matrix>;
using SequenceMap = std::function<MatrixSequence(const MatrixSequence&)>;

/// (L f)_n - shift f_n with f_{-1} = 0 and zeros past the end.
MatrixSequence apply_jacobi(const JacobiOperator& op, const MatrixSequence& f,
                            double shift);

struct HatCoefficients {
  std::vector<Matrix> A;  // A[n] = A^_n, A[0] = I
  std::vector<Matrix> B;  // B[n] = B^_n
};

struct DifferenceOperatorPair {
  SequenceMap P_op;  // forward difference
  SequenceMap Q_op;  // backward difference
  int max_length = 0;
  HatCoefficients hat;  // L^ read off QP, A^_1..A^_{max_length-1}
};

/// Operators for sequences of length <= nmax + 1.
DifferenceOperatorPair factor_operators(const JacobiOperator& op,
                                        const DarbouxConfig& cfg, int nmax);

/// A^_{n+1} = K_n K_{n+1}^{-1}, B^_n from the subleading coefficients.
HatCoefficients hat_coefficients_from_polynomials(
    const std::vector<MatrixPolynomial>& p);

JacobiOperator hat_operator(const JacobiOperator& op, const DarbouxConfig& cfg,
                            int nmax);

struct LinkReport {
  double z0 = 0.0;
  double x0 = 0.0;
  Matrix alpha;
  std::map<std::string, double> residuals;
  double tolerance = 1e-9;
};

/// Explicit P, Q between the one- and two-parameter operators; throws
/// LinkBroken when a residual exceeds the tolerance.
LinkReport two_param_link(double s11, double s10, int m, int nmax = 8,
                          std::uint64_t seed = 7);

}  // namespace cheb2d
