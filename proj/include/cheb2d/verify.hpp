#pragma once

// Residual checks shared by the CLI `verify` command, the acceptance
// binary and the Python module.

#include <cstdint>
#include <string>
#include <vector>

#include "cheb2d/darboux.hpp"
#include "cheb2d/json_io.hpp"
#include "cheb2d/measures.hpp"
#include "cheb2d/oracle.hpp"
#include "cheb2d/scattering.hpp"

namespace cheb2d {

/// max |<P_{n,m}, P_{k,m}> - delta_{nk} I| over n, k <= nmax.
double orthonormality_defect(const JacobiOperator& op,
                             const BivariateMeasure& mu, int nmax, int nodes,
                             bool include_lines = true);

/// Same, for the one-variable weight rebuilt from f_+.
double weight_orthonormality_defect(const JacobiOperator& op, int nmax,
                                    int nodes);

/// Largest gap between C slice(x) C^t and the Jost weight on `grid` points.
double slice_weight_defect(const JacobiOperator& op, const BivariateMeasure& mu,
                           int grid, int nodes);

/// Lex Gram-Schmidt against the recurrence, coefficientwise.
double oracle_equivalence_defect(const JacobiOperator& op,
                                 const BivariateMeasure& mu, int n, int nodes);

struct FactorizationDefects {
  double pq = 0.0;    // (L - x0) f against P Q f
  double qp = 0.0;    // (L^ - x0) f against Q P f
  double tail = 0.0;  // A^ - I/2 and B^ past the tail index
  double route = 0.0; // L^ from QP against L^ from leading coefficients
};
FactorizationDefects factorization_defects(const JacobiOperator& op,
                                           const DarbouxConfig& cfg, int nmax,
                                           int trials, std::uint64_t seed);

/// max |int P^_n dM^ P^_k^t - delta_{nk} I| over n, k <= nmax.
double hat_orthonormality_defect(const JacobiOperator& op,
                                 const DarbouxConfig& cfg, int nmax,
                                 int nodes);

/// z0^2 C^{-1} dM^ C^{-t} against the slices of mu on `grid` points, and
/// the same for the mass against the line's y-Hankel matrix.
struct HatSliceDefects {
  double density = 0.0;
  double mass = 0.0;
};
HatSliceDefects hat_slice_defects(const DeformationFamily& two_param, int m,
                                  int grid, int nodes);

struct Thm22Defects {
  double k = 0.0, j1 = 0.0, j2 = 0.0, j3 = 0.0;
  std::map<std::string, double> identities;
};
Thm22Defects thm22_defects(const DeformationFamily& family, int nmax, int mmax,
                           int nodes, std::uint64_t seed, int samples);

/// Total-degree coefficients by Gram-Schmidt against the closed forms.
double total_degree_defect(const DeformationFamily& family, int nmax,
                           int nodes);

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  bool skipped = false;  // not applicable; excluded from the verdict
  std::string note;
};

struct VerifyOptions {
  int n = 3;
  int m = 3;
  int nodes = 512;
  double tol = 1e-8;
  std::uint64_t seed = 1;
};

struct VerifyReport {
  std::string family;
  VerifyOptions options;
  std::vector<CheckResult> checks;
  bool pass() const;
};

VerifyReport run_verification(const DeformationFamily& family,
                              const VerifyOptions& opts);

json report_to_json(const VerifyReport& report);

}  // namespace cheb2d
