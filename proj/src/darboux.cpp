#include "cheb2d/darboux.hpp"

#include <cmath>
#include <random>

#include "cheb2d/scattering.hpp"

namespace cheb2d {

namespace {

Matrix right_solve(const Matrix& x, const Matrix& k) {
  // x k^{-1}
  return k.transpose().partialPivLu().solve(x.transpose()).transpose();
}

Matrix inverse_checked(const Matrix& a, const char* what) {
  Eigen::JacobiSVD<Matrix> svd(a);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 1e-14 * std::max(1.0, sv(0)))
    throw SingularMatrix(std::string(what) + ": singular matrix");
  return a.inverse();
}

Matrix real_part(const CMatrix& a) { return a.real(); }

Matrix jost_minus_at(const JacobiOperator& op, double z0) {
  const Matrix f = real_part(scattering_sequence(op, -1, cplx(z0), 0)[-1]).transpose();
  Eigen::JacobiSVD<Matrix> svd(f);
  const auto& sv = svd.singularValues();
  if (sv(sv.size() - 1) <= 0.0 || sv(0) / sv(sv.size() - 1) > 1e12)
    throw SingularJost("f_-(z0) is singular");
  return f;
}

double sign_of(double v) { return v < 0.0 ? -1.0 : 1.0; }

MatrixSequence zeros_like(const MatrixSequence& f) {
  MatrixSequence out;
  for (const auto& m : f) out.push_back(Matrix::Zero(m.rows(), m.cols()));
  return out;
}

MatrixSequence random_sequence(std::mt19937_64& rng, int support, int length,
                               int block) {
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  MatrixSequence f(length, Matrix::Zero(block, block));
  for (int n = 0; n < support; ++n)
    for (int i = 0; i < block; ++i)
      for (int j = 0; j < block; ++j) f[n](i, j) = unit(rng);
  return f;
}

double seq_diff(const MatrixSequence& a, const MatrixSequence& b) {
  double worst = 0.0;
  for (std::size_t n = 0; n < a.size(); ++n)
    worst = std::max(worst, hs_norm(a[n] - b.at(n)));
  return worst;
}

}  // namespace

DarbouxConfig DarbouxConfig::from_z0(double z0) {
  if (!(std::abs(z0) > 0.0 && std::abs(z0) < 1.0))
    throw Error("DarbouxConfig: need 0 < |z0| < 1");
  return {z0, 0.5 * (z0 + 1.0 / z0)};
}

DarbouxConfig DarbouxConfig::from_s10(double s10) {
  if (!(std::abs(s10) > 0.5)) throw Error("DarbouxConfig: need |s10| > 1/2");
  return from_z0(1.0 / (2.0 * s10));
}

QSequence q_sequence(const JacobiOperator& op, const DarbouxConfig& cfg,
                     int nmax) {
  const Matrix fm = jost_minus_at(op, cfg.z0);
  const Matrix fmt_inv = fm.transpose().inverse();
  const auto pm = scattering_sequence(op, -1, cplx(cfg.z0), nmax);
  QSequence q;
  for (int n = -1; n <= nmax; ++n)
    q.values.push_back(real_part(pm[n]) * fmt_inv / (2.0 * cfg.z0));
  return q;
}

Matrix HatMeasure::density_ratio(double x) const {
  return matrix_weight_ratio(fplus, x) / (2.0 * cfg.z0 * (cfg.x0 - x));
}

Matrix HatMeasure::density(double x) const {
  return matrix_weight(fplus, x) / (2.0 * cfg.z0 * (cfg.x0 - x));
}

HatMeasure hat_measure(const JacobiOperator& op, const DarbouxConfig& cfg) {
  HatMeasure hm;
  hm.cfg = cfg;
  hm.fplus = jost_fplus(op);
  const double z0 = cfg.z0;
  // f_+ is a Laurent polynomial, so f_+(1/z0) is its continuation
  const Matrix f_inv = hm.fplus.eval(cplx(1.0 / z0)).real();
  const Matrix f_z0 = hm.fplus.eval(cplx(z0)).real();
  hm.extension_gap = max_abs(f_inv - jost_minus_at(op, z0));
  const Matrix core = f_inv.transpose() * f_z0;
  Matrix r = -((z0 - 1.0 / z0) / (4.0 * z0)) * inverse_checked(core, "hat_measure");
  r = (0.5 * (r + r.transpose())).eval();
  hm.mass = r;
  Eigen::SelfAdjointEigenSolver<Matrix> eig(r);
  hm.min_mass_eigenvalue = eig.eigenvalues()(0);
  hm.admissible = hm.min_mass_eigenvalue >= -1e-12 * std::max(1.0, max_abs(r));
  return hm;
}

std::vector<Matrix> dn_constants(const JacobiOperator& op,
                                 const DarbouxConfig& cfg, int nmax) {
  const auto q = q_sequence(op, cfg, nmax);
  std::vector<Matrix> d;
  for (int n = 0; n <= nmax; ++n) {
    const Matrix& qm = q[n - 1];
    const Matrix x = qm.transpose() * op.A(n) * q[n] / (2.0 * cfg.z0);
    Matrix s = qm * inverse_checked(x, "dn_constants") * qm.transpose();
    s = (0.5 * (s + s.transpose())).eval();
    const Matrix l = reverse_cholesky_lower(s);  // l^t l = s
    d.push_back(sign_of(cfg.z0) *
                qm.partialPivLu().solve(l.transpose()).transpose());
  }
  return d;
}

std::vector<Matrix> hat_polynomials(const JacobiOperator& op,
                                    const DarbouxConfig& cfg, int nmax,
                                    double x) {
  const auto q = q_sequence(op, cfg, nmax);
  const auto d = dn_constants(op, cfg, nmax);
  const auto p = eval_matrix_polys(op, nmax, x);
  std::vector<Matrix> out;
  for (int n = 0; n <= nmax; ++n) {
    Matrix v = q[n - 1].transpose() * op.A(n) * p[n];
    if (n > 0) v -= q[n].transpose() * op.A(n).transpose() * p[n - 1];
    out.push_back(d[n] * v);
  }
  return out;
}

std::vector<MatrixPolynomial> hat_polynomial_coefficients(
    const JacobiOperator& op, const DarbouxConfig& cfg, int nmax) {
  const auto q = q_sequence(op, cfg, nmax);
  const auto d = dn_constants(op, cfg, nmax);
  const auto p = matrix_poly_coefficients(op, nmax);
  std::vector<MatrixPolynomial> out;
  for (int n = 0; n <= nmax; ++n) {
    MatrixPolynomial h;
    const Matrix left = d[n] * q[n - 1].transpose() * op.A(n);
    for (const auto& c : p[n].coeffs) h.coeffs.push_back(left * c);
    if (n > 0) {
      const Matrix right = d[n] * q[n].transpose() * op.A(n).transpose();
      for (std::size_t k = 0; k < p[n - 1].coeffs.size(); ++k)
        h.coeffs[k] -= right * p[n - 1].coeffs[k];
    }
    out.push_back(std::move(h));
  }
  return out;
}

MatrixSequence apply_jacobi(const JacobiOperator& op, const MatrixSequence& f,
                            double shift) {
  const int len = static_cast<int>(f.size());
  MatrixSequence out = zeros_like(f);
  for (int n = 0; n < len; ++n) {
    out[n] = (op.B(n) - shift * Matrix::Identity(op.block(), op.block())) * f[n];
    if (n + 1 < len) out[n] += op.A(n + 1) * f[n + 1];
    if (n > 0) out[n] += op.A(n).transpose() * f[n - 1];
  }
  return out;
}

DifferenceOperatorPair factor_operators(const JacobiOperator& op,
                                        const DarbouxConfig& cfg, int nmax) {
  const int top = nmax + 1;
  const auto q = q_sequence(op, cfg, top);
  const auto d = dn_constants(op, cfg, top);
  std::vector<Matrix> d_inv, qt_inv;
  for (int n = 0; n <= top; ++n) {
    d_inv.push_back(inverse_checked(d[n], "factor_operators"));
    qt_inv.push_back(inverse_checked(q[n].transpose(), "factor_operators"));
  }
  std::vector<Matrix> q_left, q_right;  // d_n Q_{n-1}^t A_n, d_n Q_n^t A_n^t
  for (int n = 0; n <= top; ++n) {
    q_left.push_back(d[n] * q[n - 1].transpose() * op.A(n));
    q_right.push_back(d[n] * q[n].transpose() * op.A(n).transpose());
  }

  DifferenceOperatorPair pair;
  pair.max_length = nmax + 1;
  auto check = [len_max = pair.max_length](const MatrixSequence& f) {
    if (static_cast<int>(f.size()) > len_max)
      throw Error("factor_operators: sequence longer than prepared range");
  };
  pair.Q_op = [=](const MatrixSequence& f) {
    check(f);
    MatrixSequence out = zeros_like(f);
    for (std::size_t n = 0; n < f.size(); ++n) {
      out[n] = q_left[n] * f[n];
      if (n > 0) out[n] -= q_right[n] * f[n - 1];
    }
    return out;
  };
  pair.P_op = [=](const MatrixSequence& g) {
    check(g);
    MatrixSequence out = zeros_like(g);
    for (std::size_t n = 0; n < g.size(); ++n) {
      Matrix v = -d_inv[n] * g[n];
      if (n + 1 < g.size()) v += d_inv[n + 1] * g[n + 1];
      out[n] = qt_inv[n] * v;
    }
    return out;
  };

  const int b = op.block();
  pair.hat.A.push_back(Matrix::Identity(b, b));
  for (int n = 0; n + 1 <= top; ++n)
    pair.hat.A.push_back(q_left[n] * qt_inv[n] * d_inv[n + 1]);
  for (int n = 0; n <= nmax; ++n) {
    Matrix bn = cfg.x0 * Matrix::Identity(b, b) - q_left[n] * qt_inv[n] * d_inv[n];
    if (n > 0) bn -= q_right[n] * qt_inv[n - 1] * d_inv[n];
    pair.hat.B.push_back(bn);
  }
  return pair;
}

HatCoefficients hat_coefficients_from_polynomials(
    const std::vector<MatrixPolynomial>& p) {
  if (p.size() < 2) throw Error("hat_coefficients: need at least two polynomials");
  const int top = static_cast<int>(p.size()) - 1;
  auto lead = [&](int n) -> const Matrix& { return p[n].coeffs.at(n); };
  auto sub = [&](int n) -> Matrix {
    return n == 0 ? Matrix::Zero(p[0].coeffs[0].rows(), p[0].coeffs[0].cols())
                  : p[n].coeffs.at(n - 1);
  };
  HatCoefficients h;
  h.A.push_back(Matrix::Identity(lead(0).rows(), lead(0).cols()));
  for (int n = 0; n < top; ++n) h.A.push_back(right_solve(lead(n), lead(n + 1)));
  for (int n = 0; n < top; ++n)
    h.B.push_back(right_solve(sub(n) - h.A[n + 1] * sub(n + 1), lead(n)));
  return h;
}

JacobiOperator hat_operator(const JacobiOperator& op, const DarbouxConfig& cfg,
                            int nmax) {
  const auto pair = factor_operators(op, cfg, nmax);
  std::vector<Matrix> a(pair.hat.A.begin() + 1, pair.hat.A.end());
  std::vector<Matrix> b = pair.hat.B;
  const int bs = op.block();
  for (auto& m : a) {  // clean roundoff above the diagonal
    m.triangularView<Eigen::StrictlyUpper>().setZero();
  }
  for (auto& m : b) m = (0.5 * (m + m.transpose())).eval();
  // snap converged tail entries so the operator sees a finite tail
  for (std::size_t n = 0; n < a.size(); ++n)
    if (max_abs(a[n] - 0.5 * Matrix::Identity(bs, bs)) <= 1e-12)
      a[n] = 0.5 * Matrix::Identity(bs, bs);
  for (auto& m : b)
    if (max_abs(m) <= 1e-12) m.setZero();
  return JacobiOperator(op.m(), a, b, op.y_basis());
}

LinkReport two_param_link(double s11, double s10, int m, int nmax,
                          std::uint64_t seed) {
  const auto one_fam = DeformationFamily::one_param(s11);
  const auto two_fam = DeformationFamily::two_param(s11, s10);
  two_fam.validate();
  const JacobiOperator one = jacobi_operator(one_fam, m);
  const JacobiOperator two = jacobi_operator(two_fam, m);
  const DarbouxConfig cfg = DarbouxConfig::from_s10(s10);
  const int b = m + 1;

  LinkReport rep;
  rep.z0 = cfg.z0;
  rep.x0 = cfg.x0;
  rep.alpha = Matrix::Identity(b, b);
  for (int i = 1; i < b; ++i) rep.alpha(i, i - 1) = -2.0 * s10 * s11;
  const Matrix alpha = rep.alpha;

  auto Q = [&](const MatrixSequence& f) {
    MatrixSequence out = zeros_like(f);
    for (std::size_t n = 0; n < f.size(); ++n)
      out[n] = n == 0 ? Matrix(alpha * f[0])
                      : Matrix(f[n] - 4.0 * s10 * one.A(n).transpose() * f[n - 1]);
    return out;
  };
  auto P = [&](const MatrixSequence& g) {
    MatrixSequence out = zeros_like(g);
    for (std::size_t n = 0; n < g.size(); ++n) {
      const Matrix next = n + 1 < g.size() ? g[n + 1] : Matrix::Zero(b, b);
      out[n] = n == 0 ? Matrix(one.A(1) * next - alpha.transpose() * g[0] / (4.0 * s10))
                      : Matrix(0.5 * next - g[n] / (4.0 * s10));
    }
    return out;
  };

  std::mt19937_64 rng(seed);
  double pq = 0.0, qp = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_sequence(rng, nmax + 1, nmax + 4, b);
    pq = std::max(pq, seq_diff(apply_jacobi(one, f, cfg.x0), P(Q(f))));
    qp = std::max(qp, seq_diff(apply_jacobi(two, f, cfg.x0), Q(P(f))));
  }
  rep.residuals["PQ"] = pq;
  rep.residuals["QP"] = qp;

  // P^_n C_one = z0 P'_n C_two, i.e. P^_n = z0 P'_n alpha
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  double hp = 0.0;
  for (int k = 0; k < 50; ++k) {
    const double x = unit(rng);
    const auto ph = hat_polynomials(one, cfg, nmax, x);
    const auto pp = eval_matrix_polys(two, nmax, x);
    for (int n = 0; n <= nmax; ++n)
      hp = std::max(hp, hs_norm(ph[n] * one.y_basis() -
                                cfg.z0 * pp[n] * two.y_basis()));
  }
  rep.residuals["hat_vs_prime"] = hp;

  const auto pair = factor_operators(one, cfg, nmax);
  double op_gap = 0.0;
  for (int n = 0; n <= nmax; ++n) {
    op_gap = std::max(op_gap, max_abs(pair.hat.A[n + 1] - two.A(n + 1)));
    op_gap = std::max(op_gap, max_abs(pair.hat.B[n] - two.B(n)));
  }
  rep.residuals["hat_operator"] = op_gap;

  for (const auto& [key, value] : rep.residuals)
    if (!(value <= rep.tolerance))
      throw LinkBroken("two_param_link: " + key, value);
  return rep;
}

}  // namespace cheb2d
