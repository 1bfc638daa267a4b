#include "cheb2d/oracle.hpp"

#include <cmath>
#include <random>

#include "cheb2d/scattering.hpp"

namespace cheb2d {

namespace {

void bump(std::map<std::string, double>& r, const std::string& key, double v) {
  auto [it, inserted] = r.try_emplace(key, v);
  if (!inserted) it->second = std::max(it->second, v);
}

Matrix inverse_lower(const Matrix& l) {
  return solve_lower_triangular(l, Matrix::Identity(l.rows(), l.cols()));
}

}  // namespace

Vector chebyshev_u(int n, double y) {
  Vector u(std::max(n + 1, 0));
  for (int k = 0; k <= n; ++k)
    u(k) = k == 0 ? 1.0 : k == 1 ? 2.0 * y : 2.0 * y * u(k - 1) - u(k - 2);
  return u;
}

std::vector<VectorPolynomial> gram_schmidt_lex(const DoublyHankel& H) {
  const int b = H.m + 1;
  const Matrix linv = inverse_lower(cholesky_lower(H.full));
  std::vector<VectorPolynomial> out;
  for (int k = 0; k <= H.n; ++k) {
    VectorPolynomial p;
    for (int l = 0; l < b; ++l) {
      Matrix c(k + 1, b);
      for (int a = 0; a <= k; ++a)
        for (int j = 0; j < b; ++j) c(a, j) = linv(k * b + l, a * b + j);
      p.comps.push_back({c});
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<VectorPolynomial> lex_polynomials(const Matrix& h, int n, int m) {
  return gram_schmidt_lex(doubly_hankel(h, n, m));
}

std::vector<VectorPolynomial> tilde_polynomials(const Matrix& h, int n, int m) {
  const Matrix ht = h.transpose();
  std::vector<VectorPolynomial> out;
  for (const auto& p : lex_polynomials(ht, m, n)) out.push_back(p.swapped());
  return out;
}

std::vector<VectorPolynomial> recurrence_polynomials(const JacobiOperator& op,
                                                     int nmax) {
  const int b = op.block();
  std::vector<VectorPolynomial> out;
  for (int k = 0; k <= nmax; ++k) {
    const auto blocks = vector_poly_monomial_blocks(op, k);
    VectorPolynomial p;
    for (int l = 0; l < b; ++l) {
      Matrix c(blocks.size(), b);
      for (std::size_t a = 0; a < blocks.size(); ++a) c.row(a) = blocks[a].row(l);
      p.comps.push_back({c});
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::pair<int, int> thm22_moment_orders(int n, int m) {
  return {2 * n + 2, 2 * m};
}

namespace {

struct Thm22Polys {
  std::vector<VectorPolynomial> p_m;     // P_{k,m}, k <= n+1
  std::vector<VectorPolynomial> p_m1;    // P_{k,m-1}, k <= n
  std::vector<VectorPolynomial> t_n;     // P~_{n,j}, j <= m
  std::vector<VectorPolynomial> t_n1;    // P~_{n-1,j}, j <= m
};

Thm22Polys thm22_polys(const Matrix& h, int n, int m) {
  if (n < 1 || m < 1) throw Error("lex step: need n, m >= 1");
  return {lex_polynomials(h, n + 1, m), lex_polynomials(h, n, m - 1),
          tilde_polynomials(h, n, m), tilde_polynomials(h, n - 1, m)};
}

}  // namespace

Thm22Coefficients thm22_coefficients(const Matrix& h, int n, int m) {
  const auto P = thm22_polys(h, n, m);
  const MomentForm f(h);
  Thm22Coefficients c;
  c.n = n;
  c.m = m;
  const auto& pn = P.p_m[n];
  const auto& pm1 = P.p_m1[n];
  c.A = f.gram(P.p_m[n - 1].times_x(), pn);
  c.A_next = f.gram(pn.times_x(), P.p_m[n + 1]);
  c.B = f.gram(pn.times_x(), pn);
  c.J1 = f.gram(pm1.times_y(), pn);
  c.J2 = -f.gram(pm1.times_y(), P.t_n1[m]);
  c.J3 = -f.gram(pm1.times_y(), P.t_n1[m - 1]);
  c.Gamma = f.gram(pm1, pn);
  c.K = f.gram(pm1, P.t_n1[m]);
  c.I = f.gram(pn, P.t_n[m]);
  c.A_tilde = f.gram(P.t_n1[m - 1].times_y(), P.t_n1[m]);
  return c;
}

Thm22Coefficients thm22_coefficients(const BivariateMeasure& mu, int n, int m,
                                     int nodes) {
  const auto [imax, jmax] = thm22_moment_orders(n, m);
  return thm22_coefficients(moments(mu, imax, jmax, nodes), n, m);
}

std::map<std::string, double> residuals_recurrences(const Matrix& h,
                                                    const Thm22Coefficients& c,
                                                    std::uint64_t seed,
                                                    int samples) {
  const int n = c.n, m = c.m;
  const auto P = thm22_polys(h, n, m);
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::map<std::string, double> r;
  for (int s = 0; s < samples; ++s) {
    const double x = unit(rng);
    const double y = unit(rng);
    auto at = [&](const VectorPolynomial& p) { return p.eval(x, y); };
    const Vector pn = at(P.p_m[n]);
    const Vector pm1 = at(P.p_m1[n]);
    const Vector tn1m = at(P.t_n1[m]);
    bump(r, "x_recurrence",
         max_abs(x * pn - c.A_next * at(P.p_m[n + 1]) - c.B * pn -
                 c.A.transpose() * at(P.p_m[n - 1])));
    bump(r, "band_drop", max_abs(c.Gamma * pn - pm1 + c.K * tn1m));
    bump(r, "y_recurrence", max_abs(c.J1 * pn - y * pm1 - c.J2 * tn1m -
                            c.J3 * at(P.t_n1[m - 1])));
    bump(r, "tilde_expansion", max_abs(pn - c.I * at(P.t_n[m]) - c.Gamma.transpose() * pm1));
  }
  return r;
}

TotalDegreeBasis gram_schmidt_totaldeg(const Matrix& h, int nmax) {
  if (h.rows() < 2 * nmax + 1 || h.cols() < 2 * nmax + 1)
    throw InsufficientMoments("gram_schmidt_totaldeg: moment table too small");
  std::vector<std::pair<int, int>> mono;  // (x power, y power)
  for (int d = 0; d <= nmax; ++d)
    for (int k = 0; k <= d; ++k) mono.emplace_back(k, d - k);
  const int dim = static_cast<int>(mono.size());
  Matrix g(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      g(i, j) = h(mono[i].first + mono[j].first, mono[i].second + mono[j].second);
  const Matrix linv = inverse_lower(cholesky_lower(g));

  TotalDegreeBasis basis;
  int row = 0;
  for (int d = 0; d <= nmax; ++d) {
    VectorPolynomial p;
    for (int k = 0; k <= d; ++k, ++row) {
      Matrix c = Matrix::Zero(d + 1, d + 1);
      for (int j = 0; j <= row; ++j) c(mono[j].first, mono[j].second) = linv(row, j);
      p.comps.push_back({c});
    }
    basis.P.push_back(std::move(p));
  }
  return basis;
}

TotalDegreeCoefficients extract_total_degree(const Matrix& h,
                                             const TotalDegreeBasis& basis,
                                             int n) {
  if (n + 1 >= static_cast<int>(basis.P.size()))
    throw Error("extract_total_degree: basis too short");
  const MomentForm f(h);
  const auto& p = basis.P[n];
  const auto& q = basis.P[n + 1];
  TotalDegreeCoefficients c;
  c.n = n;
  c.Ax = f.gram(p.times_x(), q);
  c.Ay = f.gram(p.times_y(), q);
  c.Bx = f.gram(p.times_x(), p);
  c.By = f.gram(p.times_y(), p);
  return c;
}

std::vector<PhiSample> phi_samples(int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * std::acos(-1.0));
  std::uniform_real_distribution<double> unit(-1.0, 1.0);
  std::vector<PhiSample> out;
  for (int k = 0; k < count; ++k) {
    const double t = angle(rng);
    out.push_back({std::polar(1.0, t), unit(rng)});
  }
  return out;
}

std::map<std::string, double> phi_identity_check(
    double s11, int m, const std::vector<PhiSample>& samples) {
  if (m < 0) throw Error("phi_identity_check: m must be >= 0");
  const auto family = DeformationFamily::one_param(s11);
  family.validate();
  const JacobiOperator op = jacobi_operator(family, m);
  const JacobiOperator op1 = jacobi_operator(family, 1);
  const double c = std::sqrt(1.0 - s11 * s11);
  const double rate = std::abs(s11);

  // enough terms that the dropped tail, bounded with |U_j| <= j+1, is tiny
  int terms = static_cast<int>(std::ceil(std::log(1e-12) / std::log(rate)));
  while (std::pow(rate, terms) * (m + terms + 1) / (1.0 - rate) > 1e-15) ++terms;

  std::map<std::string, double> r;
  for (const auto& smp : samples) {
    const cplx z = smp.z;
    const double y = smp.y;
    const Vector u = chebyshev_u(m + terms, y);
    auto phi_of = [&](const JacobiOperator& o) {
      Vector mono(o.block());
      for (int k = 0; k < o.block(); ++k) mono(k) = std::pow(y, k);
      return CVector(psi(o, 1, z) * (o.y_basis() * mono).cast<cplx>());
    };
    const CVector phi = phi_of(op);
    const cplx phi0 = (s11 * s11 * z * z - 2.0 * s11 * z * y + 1.0) / (z * c);

    bump(r, "phi0", std::abs(phi_of(op1)(0) - phi0));
    bump(r, "inverse_modulus", std::abs(1.0 / std::norm(phi0) - mu0(s11, z.real(), y)));
    for (int i = 0; i < m; ++i) bump(r, "lower", std::abs(phi(i) - phi0 * u(i)));
    const double um1 = m >= 1 ? u(m - 1) : 0.0;
    bump(r, "top", std::abs(phi(m) - (u(m) / z - s11 * um1)));
    cplx series = 0.0;
    cplx zs = 1.0;
    for (int j = 0; j < terms; ++j, zs *= z * s11) series += zs * u(m + j);
    bump(r, "series", std::abs(phi(m) - c * phi0 * series));
  }
  return r;
}

}  // namespace cheb2d
