#include "cheb2d/measures.hpp"

#include <cmath>
#include <numbers>

#include "cheb2d/parallel.hpp"

namespace cheb2d {

namespace {

constexpr double kPi = std::numbers::pi;

Matrix add(const Matrix& a, const Matrix& b) { return a + b; }

}  // namespace

double BivariateMeasure::ac_density(double x, double y) const {
  if (std::abs(x) >= 1.0 || std::abs(y) >= 1.0) return 0.0;
  return 4.0 / (kPi * kPi) * std::sqrt(1.0 - x * x) * std::sqrt(1.0 - y * y) *
         ac_ratio(x, y);
}

double BivariateMeasure::line_density(std::size_t line, double y) const {
  if (std::abs(y) >= 1.0) return 0.0;
  return 2.0 / kPi * std::sqrt(1.0 - y * y) * lines.at(line).y_ratio(y);
}

double mu0(double s, double x, double y) {
  const double c2 = 1.0 - s * s;
  const double den =
      4.0 * s * s * (x * x + y * y) - 4.0 * s * (1.0 + s * s) * x * y + c2 * c2;
  return c2 / den;
}

double density_one_param(double s11, double x, double y) {
  if (std::abs(x) >= 1.0 || std::abs(y) >= 1.0) return 0.0;
  return 4.0 / (kPi * kPi) * std::sqrt(1.0 - x * x) * std::sqrt(1.0 - y * y) *
         mu0(s11, x, y);
}

BivariateMeasure measure_product_chebyshev() {
  return {[](double, double) { return 1.0; }, {}};
}

BivariateMeasure measure_one_param(double s11) {
  DeformationFamily::one_param(s11).validate();
  return {[s11](double x, double y) { return mu0(s11, x, y); }, {}};
}

BivariateMeasure measure_two_param(double s11, double s10) {
  DeformationFamily::two_param(s11, s10).validate();
  const double z0 = 1.0 / (2.0 * s10);
  const double x0 = (4.0 * s10 * s10 + 1.0) / (4.0 * s10);
  BivariateMeasure mu;
  mu.ac_ratio = [=](double x, double y) {
    return z0 / (2.0 * (x0 - x)) * mu0(s11, x, y);
  };
  mu.lines.push_back(
      {x0, [=](double y) { return (1.0 - z0 * z0) * mu0(s11, x0, y); }});
  return mu;
}

BivariateMeasure measure_for_family(const DeformationFamily& family) {
  family.validate();
  switch (family.tag) {
    case FamilyTag::chebyshev:
      return measure_product_chebyshev();
    case FamilyTag::one_param:
      return measure_one_param(family.s11);
    case FamilyTag::two_param:
      return measure_two_param(family.s11, family.s10);
  }
  throw InvalidFamily("measure_for_family: unknown family");
}

bool two_param_line_formula_exact(double s11, double s10) {
  return std::abs(s11) <= 1.0 / (2.0 * std::abs(s10)) + 1e-15;
}

int default_nodes(const DeformationFamily& family) {
  return family.tag != FamilyTag::chebyshev && std::abs(family.s11) >= 0.85
             ? 2048
             : 512;
}

Matrix inner_product(const VectorField& f, const VectorField& g,
                     const BivariateMeasure& mu, int nodes,
                     const InnerProductOptions& opts) {
  const auto q = gauss_chebyshev2(nodes);
  const Vector f0 = f(q.nodes[0], q.nodes[0]);
  const Vector g0 = g(q.nodes[0], q.nodes[0]);
  const Matrix zero = Matrix::Zero(f0.size(), g0.size());

  Matrix acc = deterministic_reduce<Matrix>(
      nodes,
      [&](int lo, int hi) {
        Matrix part = zero;
        for (int i = lo; i < hi; ++i) {
          const double x = q.nodes[i];
          Matrix row = zero;
          for (int j = 0; j < nodes; ++j) {
            const double y = q.nodes[j];
            const double w = q.weights[j] * mu.ac_ratio(x, y);
            row.noalias() += w * f(x, y) * g(x, y).transpose();
          }
          part += q.weights[i] * row;
        }
        return part;
      },
      add);

  if (opts.include_lines) {
    for (const auto& line : mu.lines) {
      Matrix row = zero;
      for (int j = 0; j < nodes; ++j) {
        const double y = q.nodes[j];
        row.noalias() += q.weights[j] * line.y_ratio(y) * f(line.x0, y) *
                         g(line.x0, y).transpose();
      }
      acc += row;
    }
  }
  return acc;
}

Matrix gram_matrix(const VectorField& f, const BivariateMeasure& mu, int nodes,
                   const InnerProductOptions& opts) {
  const auto q = gauss_chebyshev2(nodes);
  const Eigen::Index dim = f(q.nodes[0], q.nodes[0]).size();
  const Matrix zero = Matrix::Zero(dim, dim);

  Matrix acc = deterministic_reduce<Matrix>(
      nodes,
      [&](int lo, int hi) {
        Matrix part = zero;
        for (int i = lo; i < hi; ++i) {
          const double x = q.nodes[i];
          Matrix row = zero;
          for (int j = 0; j < nodes; ++j) {
            const double y = q.nodes[j];
            const Vector v = f(x, y);
            row.selfadjointView<Eigen::Lower>().rankUpdate(
                v, q.weights[j] * mu.ac_ratio(x, y));
          }
          part += q.weights[i] * row;
        }
        return part;
      },
      add);

  if (opts.include_lines) {
    for (const auto& line : mu.lines) {
      Matrix row = zero;
      for (int j = 0; j < nodes; ++j) {
        const double y = q.nodes[j];
        const Vector v = f(line.x0, y);
        row.selfadjointView<Eigen::Lower>().rankUpdate(
            v, q.weights[j] * line.y_ratio(y));
      }
      acc += row;
    }
  }
  return acc.selfadjointView<Eigen::Lower>();
}

Matrix gram_separable(const std::function<Matrix(double)>& xfac,
                      const std::function<Vector(double)>& yfac,
                      const BivariateMeasure& mu, int nodes,
                      const InnerProductOptions& opts) {
  const auto q = gauss_chebyshev2(nodes);
  std::vector<Vector> ys;
  for (double y : q.nodes) ys.push_back(yfac(y));
  const Eigen::Index k = ys.front().size();
  const Eigen::Index dim = xfac(q.nodes[0]).rows();
  const Matrix zero = Matrix::Zero(dim, dim);

  auto y_moment = [&](auto&& ratio) {
    Matrix s = Matrix::Zero(k, k);
    for (int j = 0; j < nodes; ++j)
      s.selfadjointView<Eigen::Lower>().rankUpdate(ys[j], q.weights[j] * ratio(q.nodes[j]));
    return Matrix(s.selfadjointView<Eigen::Lower>());
  };

  Matrix acc = deterministic_reduce<Matrix>(
      nodes,
      [&](int lo, int hi) {
        Matrix part = zero;
        for (int i = lo; i < hi; ++i) {
          const double x = q.nodes[i];
          const Matrix xm = xfac(x);
          const Matrix s = y_moment([&](double y) { return mu.ac_ratio(x, y); });
          part.noalias() += q.weights[i] * xm * s * xm.transpose();
        }
        return part;
      },
      add);

  if (opts.include_lines)
    for (const auto& line : mu.lines) {
      const Matrix xm = xfac(line.x0);
      acc.noalias() += xm * y_moment(line.y_ratio) * xm.transpose();
    }
  return 0.5 * (acc + acc.transpose());
}

Matrix matrix_measure_slice(const BivariateMeasure& mu, int m, double x,
                            int nodes) {
  if (!(x > -1.0 && x < 1.0))
    throw Error("matrix_measure_slice: x must lie in (-1, 1)");
  const auto q = gauss_chebyshev2(nodes);
  Vector pm = Vector::Zero(2 * m + 1);
  for (int j = 0; j < nodes; ++j) {
    const double y = q.nodes[j];
    const double w = q.weights[j] * mu.ac_ratio(x, y);
    double p = 1.0;
    for (int k = 0; k <= 2 * m; ++k, p *= y) pm(k) += w * p;
  }
  Matrix out(m + 1, m + 1);
  for (int i = 0; i <= m; ++i)
    for (int j = 0; j <= m; ++j) out(i, j) = pm(i + j);
  return 2.0 / kPi * std::sqrt(1.0 - x * x) * out;
}

Matrix moments(const BivariateMeasure& mu, int imax, int jmax, int nodes,
               const InnerProductOptions& opts) {
  if (imax < 0 || jmax < 0) throw Error("moments: negative order");
  const auto q = gauss_chebyshev2(nodes);
  const Matrix zero = Matrix::Zero(imax + 1, jmax + 1);

  auto accumulate_row = [&](double x, double wx, auto&& y_ratio, Matrix& out) {
    Vector ym = Vector::Zero(jmax + 1);
    for (int j = 0; j < nodes; ++j) {
      const double y = q.nodes[j];
      const double w = q.weights[j] * y_ratio(y);
      double p = 1.0;
      for (int l = 0; l <= jmax; ++l, p *= y) ym(l) += w * p;
    }
    double px = wx;
    for (int i = 0; i <= imax; ++i, px *= x) out.row(i) += px * ym.transpose();
  };

  Matrix h = deterministic_reduce<Matrix>(
      nodes,
      [&](int lo, int hi) {
        Matrix part = zero;
        for (int i = lo; i < hi; ++i) {
          const double x = q.nodes[i];
          accumulate_row(x, q.weights[i],
                         [&](double y) { return mu.ac_ratio(x, y); }, part);
        }
        return part;
      },
      add);

  if (opts.include_lines)
    for (const auto& line : mu.lines)
      accumulate_row(line.x0, 1.0, line.y_ratio, h);
  return h;
}

DoublyHankel doubly_hankel(const Matrix& h, int n, int m) {
  if (n < 0 || m < 0) throw Error("doubly_hankel: negative size");
  if (h.rows() < 2 * n + 1 || h.cols() < 2 * m + 1)
    throw InsufficientMoments("doubly_hankel: moment table too small");
  DoublyHankel out;
  out.n = n;
  out.m = m;
  const int b = m + 1;
  for (int i = 0; i <= 2 * n; ++i) {
    Matrix blk(b, b);
    for (int k = 0; k < b; ++k)
      for (int l = 0; l < b; ++l) blk(k, l) = h(i, k + l);
    out.blocks.push_back(blk);
  }
  out.full.resize((n + 1) * b, (n + 1) * b);
  for (int a = 0; a <= n; ++a)
    for (int c = 0; c <= n; ++c)
      out.full.block(a * b, c * b, b, b) = out.blocks[a + c];
  return out;
}

HankelDefects hankel_defects(const Matrix& full, int n, int m) {
  const int b = m + 1;
  if (full.rows() != (n + 1) * b || full.cols() != (n + 1) * b)
    throw Error("hankel_defects: size mismatch");
  HankelDefects d;
  for (int a = 0; a <= n; ++a)
    for (int c = 0; c <= n; ++c) {
      // reference block for index a + c
      const int ra = std::min(a + c, n);
      const int rc = a + c - ra;
      d.block = std::max(d.block, max_abs(full.block(a * b, c * b, b, b) -
                                          full.block(ra * b, rc * b, b, b)));
      for (int k = 0; k < b; ++k)
        for (int l = 0; l < b; ++l) {
          const int rk = std::min(k + l, m);
          const int rl = k + l - rk;
          d.inner = std::max(d.inner, std::abs(full(a * b + k, c * b + l) -
                                               full(a * b + rk, c * b + rl)));
        }
    }
  return d;
}

}  // namespace cheb2d
