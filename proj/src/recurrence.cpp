#include "cheb2d/recurrence.hpp"

#include <cmath>

namespace cheb2d {

JacobiOperator::JacobiOperator(int m, std::vector<Matrix> a_prefix,
                               std::vector<Matrix> b_prefix, Matrix y_basis)
    : m_(m),
      half_identity_(0.5 * Matrix::Identity(m + 1, m + 1)),
      zero_(Matrix::Zero(m + 1, m + 1)),
      y_basis_(std::move(y_basis)) {
  if (m < 0) throw Error("JacobiOperator: m must be >= 0");
  const int sz = m + 1;
  a_.push_back(Matrix::Identity(sz, sz));
  for (auto& a : a_prefix) {
    if (a.rows() != sz || a.cols() != sz)
      throw Error("JacobiOperator: A block has wrong size");
    if (!is_lower_triangular(a) || (a.diagonal().array() <= 0.0).any())
      throw Error("JacobiOperator: A_n must be lower triangular with "
                  "positive diagonal");
    a_.push_back(std::move(a));
  }
  for (auto& b : b_prefix) {
    if (b.rows() != sz || b.cols() != sz)
      throw Error("JacobiOperator: B block has wrong size");
    if (!is_symmetric(b, 1e-15)) throw Error("JacobiOperator: B_n not symmetric");
    b_.push_back(std::move(b));
  }
  if (y_basis_.size() == 0) y_basis_ = Matrix::Identity(sz, sz);

  // smallest n0 >= 1 with A_k = I/2 and B_{k-1} = 0 for all k >= n0
  const int last = static_cast<int>(std::max(a_.size(), b_.size() + 1));
  tail_index_ = 1;
  for (int k = last; k >= 1; --k) {
    const bool a_free = (k >= static_cast<int>(a_.size())) ||
                        (a_[k] - half_identity_).cwiseAbs().maxCoeff() == 0.0;
    const bool b_free = (k - 1 >= static_cast<int>(b_.size())) ||
                        b_[k - 1].cwiseAbs().maxCoeff() == 0.0;
    if (!(a_free && b_free)) {
      tail_index_ = k + 1;
      break;
    }
  }
}

const Matrix& JacobiOperator::A(int n) const {
  if (n < 0) throw Error("JacobiOperator::A: negative index");
  return n < static_cast<int>(a_.size()) ? a_[n] : half_identity_;
}

const Matrix& JacobiOperator::B(int n) const {
  if (n < 0) throw Error("JacobiOperator::B: negative index");
  return n < static_cast<int>(b_.size()) ? b_[n] : zero_;
}

Matrix line_basis(const LineJacobi& line, int m) {
  Matrix c = Matrix::Zero(m + 1, m + 1);
  c(0, 0) = 1.0;
  for (int j = 0; j < m; ++j) {
    // y q_j = a_{j+1} q_{j+1} + b_j q_j + a_j q_{j-1}
    Eigen::RowVectorXd next = Eigen::RowVectorXd::Zero(m + 1);
    next.tail(m) = c.row(j).head(m);
    next -= line.b[j] * c.row(j);
    if (j > 0) next -= line.a[j - 1] * c.row(j - 1);
    c.row(j + 1) = next / line.a[j];
  }
  return c;
}

JacobiOperator jacobi_operator(const DeformationFamily& family, int m) {
  family.validate();
  const int sz = m + 1;
  const ParameterLedger ledger = ledger_for_family(family, 1, m);
  Matrix basis = line_basis(y_line_jacobi(ledger, m), m);

  if (family.tag == FamilyTag::chebyshev) return JacobiOperator(m, {}, {}, basis);

  const double s = family.s11;
  const double c = std::sqrt(1.0 - s * s);
  Matrix a1 = Matrix::Zero(sz, sz);
  for (int i = 0; i < m; ++i) a1(i, i) = 0.5 * c;
  a1(m, m) = 0.5;
  Matrix b0 = Matrix::Zero(sz, sz);
  for (int i = 0; i < m; ++i) b0(i, i + 1) = b0(i + 1, i) = 0.5 * s;

  if (family.tag == FamilyTag::one_param)
    return JacobiOperator(m, {a1}, {b0}, basis);

  const double s10 = family.s10;
  for (int i = 0; i < m; ++i) a1(i + 1, i) = -2.0 * s10 * s * 0.5 * c;
  for (int i = 0; i <= m; ++i)
    b0(i, i) = (i == 0) ? s10 : s10 * (1.0 - s * s);
  Matrix b1 = Matrix::Zero(sz, sz);
  for (int i = 0; i < m; ++i) b1(i, i) = s10 * s * s;
  return JacobiOperator(m, {a1}, {b0, b1}, basis);
}

namespace {

template <typename M, typename S>
std::vector<M> eval_polys(const JacobiOperator& op, int nmax, S x) {
  if (nmax < 0) throw Error("eval_matrix_polys: nmax must be >= 0");
  const int sz = op.block();
  std::vector<M> p;
  p.reserve(nmax + 1);
  p.push_back(M::Identity(sz, sz));
  M prev = M::Zero(sz, sz);
  for (int n = 0; n < nmax; ++n) {
    M rhs = x * p[n] - op.B(n).template cast<typename M::Scalar>() * p[n] -
            op.A(n).transpose().template cast<typename M::Scalar>() * prev;
    M next = solve_lower_triangular(
        M(op.A(n + 1).template cast<typename M::Scalar>()), rhs);
    prev = p[n];
    p.push_back(std::move(next));
  }
  return p;
}

}  // namespace

std::vector<Matrix> eval_matrix_polys(const JacobiOperator& op, int nmax,
                                      double x) {
  return eval_polys<Matrix>(op, nmax, x);
}

std::vector<CMatrix> eval_matrix_polys(const JacobiOperator& op, int nmax,
                                       cplx x) {
  return eval_polys<CMatrix>(op, nmax, x);
}

Matrix MatrixPolynomial::eval(double x) const {
  Matrix acc = Matrix::Zero(coeffs.front().rows(), coeffs.front().cols());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
  return acc;
}

CMatrix MatrixPolynomial::eval(cplx x) const {
  CMatrix acc = CMatrix::Zero(coeffs.front().rows(), coeffs.front().cols());
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    acc = acc * x + it->cast<cplx>();
  return acc;
}

std::vector<MatrixPolynomial> matrix_poly_coefficients(const JacobiOperator& op,
                                                       int nmax) {
  const int sz = op.block();
  const Matrix zero = Matrix::Zero(sz, sz);
  std::vector<MatrixPolynomial> p;
  p.push_back({{Matrix::Identity(sz, sz)}});
  MatrixPolynomial prev{{zero}};
  for (int n = 0; n < nmax; ++n) {
    const MatrixPolynomial& cur = p[n];
    MatrixPolynomial rhs;
    rhs.coeffs.assign(n + 2, zero);
    for (int k = 0; k <= cur.degree(); ++k) {
      rhs.coeffs[k + 1] += cur.coeffs[k];
      rhs.coeffs[k] -= op.B(n) * cur.coeffs[k];
    }
    for (int k = 0; k <= prev.degree(); ++k)
      rhs.coeffs[k] -= op.A(n).transpose() * prev.coeffs[k];
    for (auto& c : rhs.coeffs) c = solve_lower_triangular(op.A(n + 1), c);
    prev = cur;
    p.push_back(std::move(rhs));
  }
  return p;
}

VectorPolynomialValue eval_vector_poly(const JacobiOperator& op, int n,
                                       double x, double y) {
  const auto p = eval_matrix_polys(op, n, x);
  Vector powers(op.block());
  double yk = 1.0;
  for (int k = 0; k <= op.m(); ++k, yk *= y) powers(k) = yk;
  return {n, op.m(), p[n] * (op.y_basis() * powers)};
}

std::vector<Matrix> vector_poly_monomial_blocks(const JacobiOperator& op,
                                                int n) {
  const auto p = matrix_poly_coefficients(op, n);
  std::vector<Matrix> blocks;
  for (int a = 0; a <= n; ++a) blocks.push_back(p[n].coeffs[a] * op.y_basis());
  return blocks;
}

SliceCoefficients parametric_slice_coeffs(const DeformationFamily& family,
                                          double x, int m) {
  if (family.tag == FamilyTag::two_param)
    throw UnsupportedFamily("slice coefficients are only known for one-param");
  if (m < 1) throw Error("parametric_slice_coeffs: m must be >= 1");
  const double s = family.tag == FamilyTag::one_param ? family.s11 : 0.0;
  if (m == 1) return {0.5 * std::sqrt(1.0 - s * s), s * x};
  return {0.5, 0.0};
}

cplx parametric_psi(const DeformationFamily& family, double x, int m, cplx w) {
  if (family.tag == FamilyTag::two_param)
    throw UnsupportedFamily("parametric psi is only known for one-param");
  if (m < 1) throw Error("parametric_psi: m must be >= 1");
  const double s = family.tag == FamilyTag::one_param ? family.s11 : 0.0;
  const cplx numer = s * s * w * w - 2.0 * s * x * w + 1.0;
  return numer / std::sqrt(1.0 - s * s) / std::pow(w, m);
}

TotalDegreeCoefficients total_degree_coeffs(const DeformationFamily& family,
                                            int n) {
  if (n < 0) throw Error("total_degree_coeffs: n must be >= 0");
  const double s = family.tag == FamilyTag::chebyshev ? 0.0 : family.s11;
  const double c = std::sqrt(1.0 - s * s);
  TotalDegreeCoefficients t;
  t.n = n;
  t.Ax = Matrix::Zero(n + 1, n + 2);
  t.Ax(0, 0) = 0.5 * s;
  t.Ax(0, 1) = 0.5 * c;
  for (int i = 1; i <= n; ++i) t.Ax(i, i + 1) = 0.5;
  t.Ay = Matrix::Zero(n + 1, n + 2);
  for (int i = 0; i <= n; ++i) t.Ay(i, i) = 0.5;
  t.Bx = Matrix::Zero(n + 1, n + 1);
  t.By = Matrix::Zero(n + 1, n + 1);
  if (family.tag == FamilyTag::two_param) {
    const double s10 = family.s10;
    if (n == 0) {
      t.Bx(0, 0) = s10;
      t.By(0, 0) = s10 * s;
    } else {
      t.Bx(0, 0) = s10 * c * c;
      t.Bx(0, 1) = t.Bx(1, 0) = -s10 * s * c;
      t.Bx(1, 1) = s10 * s * s;
    }
  }
  return t;
}

}  // namespace cheb2d
