#include "cheb2d/linalg.hpp"

#include <string>

namespace cheb2d {

namespace {

void require_square(const Matrix& a, const char* who) {
  if (a.rows() != a.cols() || a.rows() == 0)
    throw Error(std::string(who) + ": matrix must be square and non-empty");
}

template <typename M>
M forward_substitute(const M& l, const M& b) {
  const Eigen::Index n = l.rows();
  if (l.cols() != n || b.rows() != n)
    throw Error("solve_lower_triangular: dimension mismatch");
  for (Eigen::Index i = 0; i < n; ++i)
    if (std::abs(l(i, i)) <= 1e-14)
      throw SingularMatrix("solve_lower_triangular: diagonal entry " +
                           std::to_string(i) + " vanishes");
  M x(n, b.cols());
  for (Eigen::Index c = 0; c < b.cols(); ++c) {
    for (Eigen::Index i = 0; i < n; ++i) {
      auto acc = b(i, c);
      for (Eigen::Index k = 0; k < i; ++k) acc -= l(i, k) * x(k, c);
      x(i, c) = acc / l(i, i);
    }
  }
  return x;
}

}  // namespace

Matrix cholesky_lower(const Matrix& a, double rel_tol) {
  require_square(a, "cholesky_lower");
  const Eigen::Index n = a.rows();
  const double scale = a.diagonal().cwiseAbs().maxCoeff();
  const double tol = rel_tol * (scale > 0.0 ? scale : 1.0);
  Matrix l = Matrix::Zero(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    double pivot = a(j, j);
    for (Eigen::Index k = 0; k < j; ++k) pivot -= l(j, k) * l(j, k);
    if (!(pivot > tol))
      throw NotPositiveDefinite("cholesky_lower: pivot " + std::to_string(j) +
                                " = " + std::to_string(pivot));
    l(j, j) = std::sqrt(pivot);
    for (Eigen::Index i = j + 1; i < n; ++i) {
      double acc = a(i, j);
      for (Eigen::Index k = 0; k < j; ++k) acc -= l(i, k) * l(j, k);
      l(i, j) = acc / l(j, j);
    }
  }
  return l;
}

Matrix reverse_cholesky_lower(const Matrix& a, double rel_tol) {
  require_square(a, "reverse_cholesky_lower");
  // With J the exchange matrix, J a J = C C^t and L = J C^t J.
  const Matrix flipped = a.reverse();
  const Matrix c = cholesky_lower(flipped, rel_tol);
  return Matrix(c.transpose().reverse());
}

Matrix solve_lower_triangular(const Matrix& l, const Matrix& b) {
  return forward_substitute(l, b);
}

CMatrix solve_lower_triangular(const CMatrix& l, const CMatrix& b) {
  return forward_substitute(l, b);
}

double operator_norm(const Matrix& a) {
  if (a.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> svd(a);
  return svd.singularValues()(0);
}

bool is_lower_triangular(const Matrix& a, double tol) {
  for (Eigen::Index j = 1; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < std::min(j, a.rows()); ++i)
      if (std::abs(a(i, j)) > tol) return false;
  return true;
}

bool is_symmetric(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return max_abs(a - a.transpose()) <= tol;
}

}  // namespace cheb2d
