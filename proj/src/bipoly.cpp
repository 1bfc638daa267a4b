#include "cheb2d/bipoly.hpp"

#include <algorithm>

namespace cheb2d {

namespace {

Matrix padded(const Matrix& c, Eigen::Index rows, Eigen::Index cols) {
  Matrix out = Matrix::Zero(rows, cols);
  out.topLeftCorner(c.rows(), c.cols()) = c;
  return out;
}

VectorPolynomial zip(const VectorPolynomial& a, const VectorPolynomial& b,
                     double sign) {
  if (a.size() != b.size()) throw Error("vector polynomial size mismatch");
  VectorPolynomial out;
  for (int i = 0; i < a.size(); ++i) {
    const auto& p = a.comps[i].c;
    const auto& q = b.comps[i].c;
    const auto r = std::max(p.rows(), q.rows());
    const auto c = std::max(p.cols(), q.cols());
    out.comps.push_back({padded(p, r, c) + sign * padded(q, r, c)});
  }
  return out;
}

}  // namespace

double BivariatePolynomial::eval(double x, double y) const {
  // Horner in x of Horner in y
  double acc = 0.0;
  for (Eigen::Index a = c.rows() - 1; a >= 0; --a) {
    double row = 0.0;
    for (Eigen::Index b = c.cols() - 1; b >= 0; --b) row = row * y + c(a, b);
    acc = acc * x + row;
  }
  return acc;
}

BivariatePolynomial BivariatePolynomial::times_x() const {
  Matrix out = Matrix::Zero(c.rows() + 1, c.cols());
  out.bottomRows(c.rows()) = c;
  return {out};
}

BivariatePolynomial BivariatePolynomial::times_y() const {
  Matrix out = Matrix::Zero(c.rows(), c.cols() + 1);
  out.rightCols(c.cols()) = c;
  return {out};
}

Vector VectorPolynomial::eval(double x, double y) const {
  Vector v(size());
  for (int i = 0; i < size(); ++i) v(i) = comps[i].eval(x, y);
  return v;
}

VectorPolynomial VectorPolynomial::times_x() const {
  VectorPolynomial out;
  for (const auto& p : comps) out.comps.push_back(p.times_x());
  return out;
}

VectorPolynomial VectorPolynomial::times_y() const {
  VectorPolynomial out;
  for (const auto& p : comps) out.comps.push_back(p.times_y());
  return out;
}

VectorPolynomial VectorPolynomial::swapped() const {
  VectorPolynomial out;
  for (const auto& p : comps) out.comps.push_back(p.swapped());
  return out;
}

VectorPolynomial combine(const Matrix& m, const VectorPolynomial& p) {
  if (m.cols() != p.size()) throw Error("combine: size mismatch");
  Eigen::Index r = 1, c = 1;
  for (const auto& q : p.comps) {
    r = std::max(r, q.c.rows());
    c = std::max(c, q.c.cols());
  }
  VectorPolynomial out;
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Matrix acc = Matrix::Zero(r, c);
    for (int j = 0; j < p.size(); ++j)
      if (m(i, j) != 0.0) acc += m(i, j) * padded(p.comps[j].c, r, c);
    out.comps.push_back({acc});
  }
  return out;
}

VectorPolynomial operator+(const VectorPolynomial& a, const VectorPolynomial& b) {
  return zip(a, b, 1.0);
}

VectorPolynomial operator-(const VectorPolynomial& a, const VectorPolynomial& b) {
  return zip(a, b, -1.0);
}

double max_coeff_diff(const VectorPolynomial& a, const VectorPolynomial& b) {
  double worst = 0.0;
  for (const auto& p : (a - b).comps) worst = std::max(worst, max_abs(p.c));
  return worst;
}

double MomentForm::pair(const BivariatePolynomial& p,
                        const BivariatePolynomial& q) const {
  if (p.deg_x() + q.deg_x() >= h_.rows() || p.deg_y() + q.deg_y() >= h_.cols())
    throw InsufficientMoments("MomentForm: moment table too small");
  double acc = 0.0;
  for (Eigen::Index a = 0; a < p.c.rows(); ++a)
    for (Eigen::Index b = 0; b < p.c.cols(); ++b) {
      if (p.c(a, b) == 0.0) continue;
      double inner = 0.0;
      for (Eigen::Index i = 0; i < q.c.rows(); ++i)
        for (Eigen::Index j = 0; j < q.c.cols(); ++j)
          inner += q.c(i, j) * h_(a + i, b + j);
      acc += p.c(a, b) * inner;
    }
  return acc;
}

Matrix MomentForm::gram(const VectorPolynomial& f,
                        const VectorPolynomial& g) const {
  Matrix out(f.size(), g.size());
  for (int i = 0; i < f.size(); ++i)
    for (int j = 0; j < g.size(); ++j) out(i, j) = pair(f.comps[i], g.comps[j]);
  return out;
}

}  // namespace cheb2d
