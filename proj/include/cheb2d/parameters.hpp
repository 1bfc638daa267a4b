#pragma once

// The s_{i,j} parameter table that determines a bivariate orthonormal
// family, and the three concrete deformations of the product Chebyshev
// measure built from it.

#include <string>
#include <vector>

#include "cheb2d/linalg.hpp"

namespace cheb2d {

enum class FamilyTag { chebyshev, one_param, two_param };

/// One of the shipped families. `s11` couples the two variables; `s10`
/// (two-parameter family only) shifts the first x-step and creates a mass
/// line at x0 = (4 s10^2 + 1) / (4 s10).
struct DeformationFamily {
  FamilyTag tag = FamilyTag::chebyshev;
  double s11 = 0.0;
  double s10 = 0.0;

  static DeformationFamily chebyshev() { return {}; }
  static DeformationFamily one_param(double s11) {
    return {FamilyTag::one_param, s11, 0.0};
  }
  static DeformationFamily two_param(double s11, double s10) {
    return {FamilyTag::two_param, s11, s10};
  }

  /// Throws InvalidFamily unless 0 < |s11| < 1 (and |s10| > 1/2 for
  /// two_param).
  void validate() const;

  /// "chebyshev", "one-param" or "two-param".
  std::string name() const;
  static DeformationFamily parse(const std::string& name, double s11,
                                 double s10);
};

/// Dense table s_{i,j}, 0 <= i <= 2 smax_n, 0 <= j <= 2 smax_m.
struct ParameterLedger {
  DeformationFamily family;
  int smax_n = 0;
  int smax_m = 0;
  Matrix values;

  double operator()(int i, int j) const { return values(i, j); }
  double& operator()(int i, int j) { return values(i, j); }
};

ParameterLedger ledger_for_family(const DeformationFamily& family, int nmax,
                                  int mmax);

struct LedgerViolation {
  int i = 0;
  int j = 0;
  std::string condition;
};

/// Checks s_{2i,2j} > 0 and ||K_{i,j}|| < 1 (operator norm). Empty result
/// means the ledger is admissible.
std::vector<LedgerViolation> validate_ledger(const ParameterLedger& ledger);

/// The m x n matrix K_{n,m} assembled from the ledger: its only free entry
/// is the bottom-right one, s_{2n-1,2m-1}.
Matrix ledger_k_matrix(const ParameterLedger& ledger, int n, int m);

/// Coefficients of one lex step (n,m): K is m x n, J1 is m x (m+1),
/// J2 is m x n.
struct LexStepCoefficients {
  Matrix K;
  Matrix J1;
  Matrix J2;
};

LexStepCoefficients lex_step_coefficients(const DeformationFamily& family,
                                          int n, int m);

/// One-variable Jacobi parameters of the line (0, j): b_{j-1} = s_{0,2j-1},
/// a_j = s_{0,2j}. Returned as (a_1..a_m, b_0..b_{m-1}).
struct LineJacobi {
  std::vector<double> a;  // a[j-1] = a_j
  std::vector<double> b;  // b[j]   = b_j
};
LineJacobi y_line_jacobi(const ParameterLedger& ledger, int m);

}  // namespace cheb2d
