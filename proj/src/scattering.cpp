#include "cheb2d/scattering.hpp"

#include <cmath>
#include <numbers>

#include "cheb2d/quadrature.hpp"

namespace cheb2d {

namespace {

CMatrix cI(int n) { return CMatrix::Identity(n, n); }

CMatrix solve_upper(const Matrix& u, const CMatrix& b) {
  for (Eigen::Index i = 0; i < u.rows(); ++i)
    if (std::abs(u(i, i)) <= 1e-14)
      throw SingularMatrix("scattering: singular A_n in downward recursion");
  return u.cast<cplx>().triangularView<Eigen::Upper>().solve(b);
}

}  // namespace

JoukowskiPoint joukowski_z(cplx x) {
  if (x.imag() == 0.0 && std::abs(x.real()) <= 1.0) {
    const double theta = std::acos(x.real());
    return {x, std::polar(1.0, theta)};
  }
  const cplx root = std::sqrt(x * x - 1.0);
  const cplx big = std::abs(x + root) >= std::abs(x - root) ? x + root : x - root;
  cplx z = 1.0 / big;  // the small root, free of cancellation
  if (std::abs(std::abs(z) - 1.0) < 1e-14 && z.imag() < 0.0) z = big;
  return {x, z};
}

CMatrix psi(const JacobiOperator& op, int n, cplx z) {
  if (z == cplx(0.0)) throw ZeroArgument("psi: z = 0");
  if (n == 0) return cI(op.block());
  const auto p = eval_matrix_polys(op, n, joukowski_x(z));
  return p[n] - 2.0 * z * op.A(n).transpose().cast<cplx>() * p[n - 1];
}

CMatrix psi_by_recursion(const JacobiOperator& op, int n, cplx z) {
  if (z == cplx(0.0)) throw ZeroArgument("psi_by_recursion: z = 0");
  const int sz = op.block();
  const auto p = eval_matrix_polys(op, std::max(n, 1), joukowski_x(z));
  CMatrix out = cI(sz);
  for (int k = 1; k <= n; ++k) {
    const CMatrix a = op.A(k).cast<cplx>();
    const CMatrix ainv = a.inverse();
    const CMatrix bracket =
        (cI(sz) - 4.0 * a * a.transpose()) * z - 2.0 * op.B(k - 1).cast<cplx>();
    out = ainv * out / (2.0 * z) + 0.5 * ainv * bracket * p[k - 1];
  }
  return out;
}

CMatrix psi_star(const JacobiOperator& op, int n, cplx z) {
  return std::pow(z, n) * psi(op, n, z);
}

LaurentMatrixPolynomial jost_fplus(const JacobiOperator& op) {
  const int n0 = op.tail_index();
  const auto coeffs = matrix_poly_coefficients(op, n0);
  const auto pn = LaurentMatrixPolynomial::from_joukowski(coeffs[n0]);
  const auto pm = LaurentMatrixPolynomial::from_joukowski(coeffs[n0 - 1]);
  const CMatrix at = op.A(n0).transpose().cast<cplx>();
  const auto psi_n = pn - (at * pm).shifted(1) * cplx(2.0);
  // f_+ = z^{n0} Psi_{n0} / (2z)
  const auto f = psi_n.shifted(n0 - 1) * cplx(0.5);
  double scale = 0.0;
  for (int k = f.low_power(); k <= f.high_power(); ++k)
    scale = std::max(scale, max_abs(f.coefficient(k)));
  return f.trimmed(1e-13 * scale);
}

LaurentMatrixPolynomial jost_fplus_interpolated(const JacobiOperator& op) {
  const int n0 = op.tail_index();
  auto f = laurent_interpolate(
      [&](cplx z) { return CMatrix(psi_star(op, n0, z) / (2.0 * z)); }, -2 * n0,
      2 * n0);
  double scale = 0.0;
  for (int k = f.low_power(); k <= f.high_power(); ++k)
    scale = std::max(scale, max_abs(f.coefficient(k)));
  return f.trimmed(1e-12 * scale);
}

LaurentMatrixPolynomial jost_fminus(const JacobiOperator& op) {
  return jost_fplus(op).reflected();
}

AssumptionReport check_assumtwo(const LaurentMatrixPolynomial& fplus,
                                int ngrid) {
  if (ngrid < 1) throw Error("check_assumtwo: ngrid must be >= 1");
  const auto zf = fplus.shifted(1);
  auto det_at = [&](cplx z) { return zf.eval(z).determinant(); };
  const int degree = std::max(1, zf.high_power() - std::min(0, zf.low_power()));
  const int per_circle = std::max(256, 32 * degree);

  AssumptionReport rep;
  rep.min_abs_det = std::abs(det_at(cplx(0.0)));
  for (int k = 1; k <= ngrid; ++k) {
    const double r = static_cast<double>(k) / ngrid;
    for (int j = 0; j < per_circle; ++j) {
      const cplx z = std::polar(r, 2.0 * std::numbers::pi * j / per_circle);
      rep.min_abs_det = std::min(rep.min_abs_det, std::abs(det_at(z)));
    }
  }
  // argument principle on the unit circle
  const int steps = 16 * per_circle;
  double winding = 0.0;
  cplx prev = det_at(cplx(1.0));
  for (int j = 1; j <= steps; ++j) {
    const cplx cur = det_at(std::polar(1.0, 2.0 * std::numbers::pi * j / steps));
    winding += std::arg(cur / prev);
    prev = cur;
  }
  rep.zero_count = static_cast<int>(std::lround(winding / (2.0 * std::numbers::pi)));
  rep.pass = rep.min_abs_det > 1e-10 && rep.zero_count == 0;
  return rep;
}

ScatteringSequence scattering_sequence(const JacobiOperator& op, int sign,
                                       cplx z, int nmax) {
  if (z == cplx(0.0)) throw ZeroArgument("scattering_sequence: z = 0");
  if (sign != 1 && sign != -1) throw Error("scattering_sequence: sign must be +-1");
  const int sz = op.block();
  const cplx x = joukowski_x(z);
  const int top = std::max(nmax, op.tail_index() - 1) + 1;
  const int free_from = std::max(op.tail_index() - 1, 0);
  std::vector<CMatrix> v(top + 2);  // v[n + 1] = P_n, n = -1..top
  // closed form in the free region; running the recursion there would
  // amplify rounding like |z|^{-2n} for the minus solution
  for (int n = free_from; n <= top; ++n) v[n + 1] = std::pow(z, sign * n) * cI(sz);
  for (int n = free_from; n >= 0; --n) {
    const CMatrix rhs = x * v[n + 1] - op.A(n + 1).cast<cplx>() * v[n + 2] -
                        op.B(n).cast<cplx>() * v[n + 1];
    v[n] = solve_upper(op.A(n).transpose(), rhs);
  }
  ScatteringSequence seq;
  seq.nmax = nmax;
  seq.values.assign(v.begin(), v.begin() + nmax + 2);
  return seq;
}

std::pair<CMatrix, CMatrix> scattering_solutions(const JacobiOperator& op,
                                                 int n, cplx z) {
  if (n < -1) throw Error("scattering_solutions: n must be >= -1");
  const int top = std::max(n, 0);
  return {scattering_sequence(op, +1, z, top)[n],
          scattering_sequence(op, -1, z, top)[n]};
}

CMatrix wronskian(const JacobiOperator& op, const SolutionSampler& x_conj,
                  const SolutionSampler& y, int n) {
  const CMatrix a = op.A(n + 1).cast<cplx>();
  return x_conj(n).adjoint() * a * y(n + 1) -
         x_conj(n + 1).adjoint() * a.transpose() * y(n);
}

Matrix matrix_weight_ratio(const LaurentMatrixPolynomial& fplus, double x) {
  if (!(x > -1.0 && x < 1.0)) throw Error("matrix_weight: x must lie in (-1, 1)");
  const cplx z = std::polar(1.0, std::acos(x));
  const CMatrix f = fplus.eval(z);
  const CMatrix g = f.adjoint() * f;
  Eigen::JacobiSVD<CMatrix> svd(g);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 0.0 || sv(0) / sv(sv.size() - 1) > 1e12)
    throw NearSingularJost("matrix_weight: f_+^dagger f_+ is near singular");
  const Matrix r = (0.25 * g.inverse()).real();
  return 0.5 * (r + r.transpose());
}

Matrix matrix_weight(const LaurentMatrixPolynomial& fplus, double x) {
  return (2.0 / std::numbers::pi) * std::sqrt(1.0 - x * x) *
         matrix_weight_ratio(fplus, x);
}

Matrix matrix_weight(const JacobiOperator& op, double x) {
  return matrix_weight(jost_fplus(op), x);
}

std::vector<cplx> circle_samples(int count) {
  std::vector<cplx> out;
  for (int k = 0; k < count; ++k) {
    const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * (k + 0.5) / count);
    if (std::abs(z - 1.0) < 1e-3 || std::abs(z + 1.0) < 1e-3) continue;
    out.push_back(z);
  }
  return out;
}

IdentityResiduals check_unit_circle_identities(const JacobiOperator& op,
                                               const std::vector<cplx>& zsamples,
                                               const CircleCheckOptions& opts) {
  const int sz = op.block();
  const int nmax = opts.nmax;
  const auto fplus = jost_fplus(op);
  IdentityResiduals out;
  auto bump = [&](const std::string& key, double v) {
    auto [it, inserted] = out.max_residual.try_emplace(key, v);
    if (!inserted) it->second = std::max(it->second, v);
  };

  for (const cplx z : zsamples) {
    const auto pp = scattering_sequence(op, +1, z, nmax + 1);
    const auto pm = scattering_sequence(op, -1, z, nmax + 1);
    const CMatrix fp = fplus.eval(z);
    const CMatrix fm = pm[-1].transpose();
    const CMatrix fm_at_inv = scattering_sequence(op, -1, 1.0 / z, 0)[-1].transpose();

    bump("jost", hs_norm(fp - pp[-1].transpose()));
    bump("ff", hs_norm(fp - fm_at_inv));
    bump("fpfm", hs_norm(fp.transpose() * fm - fm.transpose() * fp));

    const CMatrix target = 0.5 * (z - 1.0 / z) * cI(sz);
    for (int n = 0; n <= nmax; ++n) {
      const CMatrix a = op.A(n + 1).cast<cplx>();
      const CMatrix w = pp[n].adjoint() * a * pp[n + 1] -
                        pp[n + 1].adjoint() * a.transpose() * pp[n];
      bump("wronskian_pplus", hs_norm(w - target));
    }

    const auto p = eval_matrix_polys(op, nmax, joukowski_x(z));
    const cplx pref = 2.0 / (z - 1.0 / z);
    for (int n = 0; n <= nmax; ++n)
      bump("expanp", hs_norm(p[n] - pref * (pp[n] * fm - pm[n] * fp)));

    const int n0 = op.tail_index();
    const CMatrix ps0 = psi_star(op, n0, z);
    for (int n = n0; n <= n0 + 5; ++n)
      bump("psi_star_constant", hs_norm(psi_star(op, n, z) - ps0));
    for (int n = 0; n <= nmax; ++n)
      bump("psi_recursion", hs_norm(psi(op, n, z) - psi_by_recursion(op, n, z)));
  }

  if (!opts.fp_points.empty()) {
    const auto rule = gauss_chebyshev2(opts.fp_nodes);
    std::vector<std::vector<Matrix>> polys;
    std::vector<Matrix> ratios;
    for (double y : rule.nodes) {
      polys.push_back(eval_matrix_polys(op, nmax, y));
      ratios.push_back(matrix_weight_ratio(fplus, y));
    }
    for (double zr : opts.fp_points) {
      const cplx z(zr, 0.0);
      const double x = joukowski_x(z).real();
      const auto pp = scattering_sequence(op, +1, z, nmax);
      const CMatrix ft = fplus.eval(z).transpose();
      for (int n = 0; n <= nmax; ++n) {
        Matrix acc = Matrix::Zero(sz, sz);
        for (std::size_t k = 0; k < rule.nodes.size(); ++k)
          acc += rule.weights[k] / (x - rule.nodes[k]) * polys[k][n] * ratios[k];
        bump("fp", hs_norm(pp[n] - acc.cast<cplx>() * ft));
      }
    }
  }
  return out;
}

}  // namespace cheb2d
