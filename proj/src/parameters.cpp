#include "cheb2d/parameters.hpp"

#include <cmath>
#include <sstream>

namespace cheb2d {

void DeformationFamily::validate() const {
  switch (tag) {
    case FamilyTag::chebyshev:
      return;
    case FamilyTag::two_param:
      if (!(std::abs(s10) > 0.5))
        throw InvalidFamily("two-param family needs |s10| > 1/2");
      [[fallthrough]];
    case FamilyTag::one_param:
      if (!(s11 != 0.0 && std::abs(s11) < 1.0))
        throw InvalidFamily("deformed family needs 0 < |s11| < 1");
      return;
  }
}

std::string DeformationFamily::name() const {
  switch (tag) {
    case FamilyTag::chebyshev:
      return "chebyshev";
    case FamilyTag::one_param:
      return "one-param";
    case FamilyTag::two_param:
      return "two-param";
  }
  return "unknown";
}

DeformationFamily DeformationFamily::parse(const std::string& name, double s11,
                                           double s10) {
  if (name == "chebyshev") return chebyshev();
  if (name == "one-param" || name == "one_param") return one_param(s11);
  if (name == "two-param" || name == "two_param") return two_param(s11, s10);
  throw InvalidFamily("unknown family '" + name + "'");
}

ParameterLedger ledger_for_family(const DeformationFamily& family, int nmax,
                                  int mmax) {
  family.validate();
  if (nmax < 0 || mmax < 0) throw Error("ledger_for_family: negative size");
  ParameterLedger ledger;
  ledger.family = family;
  ledger.smax_n = nmax;
  ledger.smax_m = mmax;
  ledger.values = Matrix::Zero(2 * nmax + 1, 2 * mmax + 1);
  const double s11 = family.tag == FamilyTag::chebyshev ? 0.0 : family.s11;

  for (int i = 0; i <= 2 * nmax; ++i) {
    for (int j = 0; j <= 2 * mmax; ++j) {
      double v = 0.0;
      if (i == 0 && j == 0) {
        v = 1.0;
      } else if (i == 0 || j == 0) {
        // boundary lines: odd index -> b parameter (0), even -> a parameter
        v = ((i + j) % 2 == 0) ? 0.5 : 0.0;
      } else if (i % 2 == 1 && j % 2 == 1) {
        v = s11;
      } else if (i % 2 == 0 && j % 2 == 0) {
        v = 0.5;
      }
      ledger.values(i, j) = v;
    }
  }
  if (family.tag == FamilyTag::two_param) {
    if (nmax >= 1) {
      ledger.values(1, 0) = family.s10;
      ledger.values(2, 0) = 0.5;
    }
    if (mmax >= 1) {
      ledger.values(0, 1) = family.s10 * family.s11;
      ledger.values(0, 2) = 0.5;
    }
  }
  return ledger;
}

Matrix ledger_k_matrix(const ParameterLedger& ledger, int n, int m) {
  Matrix k = Matrix::Zero(m, n);
  k(m - 1, n - 1) = ledger(2 * n - 1, 2 * m - 1);
  return k;
}

std::vector<LedgerViolation> validate_ledger(const ParameterLedger& ledger) {
  std::vector<LedgerViolation> out;
  for (int i = 0; i <= ledger.smax_n; ++i) {
    for (int j = 0; j <= ledger.smax_m; ++j) {
      if (i == 0 && j == 0) continue;
      if (!(ledger(2 * i, 2 * j) > 0.0)) {
        std::ostringstream os;
        os << "s_{2i,2j} > 0 fails at (" << 2 * i << "," << 2 * j << ")";
        out.push_back({2 * i, 2 * j, os.str()});
      }
      if (i >= 1 && j >= 1) {
        const double nrm = operator_norm(ledger_k_matrix(ledger, i, j));
        if (!(nrm < 1.0)) {
          std::ostringstream os;
          os << "||K_{" << i << "," << j << "}|| < 1 fails (norm " << nrm
             << ")";
          out.push_back({2 * i - 1, 2 * j - 1, os.str()});
        }
      }
    }
  }
  return out;
}

LexStepCoefficients lex_step_coefficients(const DeformationFamily& family,
                                          int n, int m) {
  if (n < 1 || m < 1) throw Error("lex_step_coefficients: need n, m >= 1");
  const double s11 = family.tag == FamilyTag::chebyshev ? 0.0 : family.s11;
  LexStepCoefficients c;
  c.K = Matrix::Zero(m, n);
  c.K(m - 1, n - 1) = s11;
  c.J1 = Matrix::Zero(m, m + 1);
  for (int r = 0; r < m; ++r) {
    if (r >= 1) c.J1(r, r - 1) = 0.5;
    c.J1(r, r + 1) = 0.5;
  }
  if (m >= 2) c.J1(m - 1, m - 2) = 0.5 * std::sqrt(1.0 - s11 * s11);
  c.J2 = Matrix::Zero(m, n);
  return c;
}

LineJacobi y_line_jacobi(const ParameterLedger& ledger, int m) {
  if (m > ledger.smax_m) throw Error("y_line_jacobi: ledger too small");
  LineJacobi line;
  for (int j = 1; j <= m; ++j) line.a.push_back(ledger(0, 2 * j));
  for (int j = 0; j < m; ++j) line.b.push_back(ledger(0, 2 * j + 1));
  return line;
}

}  // namespace cheb2d
