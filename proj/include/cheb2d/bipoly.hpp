#pragma once

#include <vector>

#include "cheb2d/linalg.hpp"

namespace cheb2d {

// sum_{a,b} c(a, b) x^a y^b
struct BivariatePolynomial {
  Matrix c = Matrix::Zero(1, 1);

  int deg_x() const { return static_cast<int>(c.rows()) - 1; }
  int deg_y() const { return static_cast<int>(c.cols()) - 1; }
  double eval(double x, double y) const;
  BivariatePolynomial times_x() const;
  BivariatePolynomial times_y() const;
  BivariatePolynomial swapped() const { return {c.transpose()}; }
};

struct VectorPolynomial {
  std::vector<BivariatePolynomial> comps;

  int size() const { return static_cast<int>(comps.size()); }
  Vector eval(double x, double y) const;
  VectorPolynomial times_x() const;
  VectorPolynomial times_y() const;
  VectorPolynomial swapped() const;
};

// rows of m applied to the components of p
VectorPolynomial combine(const Matrix& m, const VectorPolynomial& p);
VectorPolynomial operator+(const VectorPolynomial& a, const VectorPolynomial& b);
VectorPolynomial operator-(const VectorPolynomial& a, const VectorPolynomial& b);

// Largest coefficient difference after padding to a common shape.
double max_coeff_diff(const VectorPolynomial& a, const VectorPolynomial& b);

// Bilinear form <p, q> = sum p(a,b) q(c,d) h(a+c, b+d).
class MomentForm {
 public:
  explicit MomentForm(Matrix h) : h_(std::move(h)) {}
  const Matrix& table() const { return h_; }
  double pair(const BivariatePolynomial& p, const BivariatePolynomial& q) const;
  Matrix gram(const VectorPolynomial& f, const VectorPolynomial& g) const;

 private:
  Matrix h_;
};

}  // namespace cheb2d
