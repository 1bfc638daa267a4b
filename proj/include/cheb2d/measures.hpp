#pragma once

#include <functional>
#include <vector>

#include "cheb2d/linalg.hpp"
#include "cheb2d/parameters.hpp"
#include "cheb2d/quadrature.hpp"

namespace cheb2d {

// Densities are stored as ratios to the Chebyshev-2 weights so that the
// Gauss rule integrates them directly:
//   a.c. part   (4/pi^2) sqrt(1-x^2) sqrt(1-y^2) * ac_ratio(x, y)
//   line x = x0 (2/pi) sqrt(1-y^2) * y_ratio(y)
struct SingularLine {
  double x0 = 0.0;
  std::function<double(double)> y_ratio;
};

struct BivariateMeasure {
  std::function<double(double, double)> ac_ratio;
  std::vector<SingularLine> lines;

  double ac_density(double x, double y) const;
  double line_density(std::size_t line, double y) const;
};

double mu0(double s11, double x, double y);
double density_one_param(double s11, double x, double y);

BivariateMeasure measure_product_chebyshev();
BivariateMeasure measure_one_param(double s11);
BivariateMeasure measure_two_param(double s11, double s10);
BivariateMeasure measure_for_family(const DeformationFamily& family);

// Whether the closed-form two-parameter measure is the orthogonality
// measure. The line density formula assumes |s11| <= |z0|.
bool two_param_line_formula_exact(double s11, double s10);

// Nodes per axis: 512, or 2048 for |s11| >= 0.85.
int default_nodes(const DeformationFamily& family);

// Stacked vector field: column of all components at (x, y).
using VectorField = std::function<Vector(double, double)>;

struct InnerProductOptions {
  bool include_lines = true;
};

// Integral of f g^t against mu on an N x N tensor grid plus lines.
Matrix inner_product(const VectorField& f, const VectorField& g,
                     const BivariateMeasure& mu, int nodes,
                     const InnerProductOptions& opts = {});

// Gram matrix of one field with itself.
Matrix gram_matrix(const VectorField& f, const BivariateMeasure& mu, int nodes,
                   const InnerProductOptions& opts = {});

// Gram matrix of f(x, y) = X(x) Y(y), X is D x k and Y a k-vector. Same
// quadrature as gram_matrix, but the y-sum is shared across the rows of X.
Matrix gram_separable(const std::function<Matrix(double)>& xfac,
                      const std::function<Vector(double)>& yfac,
                      const BivariateMeasure& mu, int nodes,
                      const InnerProductOptions& opts = {});

// (m+1)x(m+1) density of int y^{i+j} mu(x, y) dy.
Matrix matrix_measure_slice(const BivariateMeasure& mu, int m, double x,
                            int nodes);

// h(i, j) = int x^i y^j dmu for i <= imax, j <= jmax.
Matrix moments(const BivariateMeasure& mu, int imax, int jmax, int nodes,
               const InnerProductOptions& opts = {});

struct DoublyHankel {
  int n = 0;
  int m = 0;
  std::vector<Matrix> blocks;  // H_0..H_{2n}
  Matrix full;                 // (n+1)(m+1) square
};

DoublyHankel doubly_hankel(const Matrix& h, int n, int m);

struct HankelDefects {
  double block = 0.0;  // block (a,b) against H_{a+b}
  double inner = 0.0;  // entry (k,l) of each block against h_{., k+l}
};
HankelDefects hankel_defects(const Matrix& full, int n, int m);

}  // namespace cheb2d
