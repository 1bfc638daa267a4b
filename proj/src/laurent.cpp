#include "cheb2d/laurent.hpp"

#include <algorithm>

#include "cheb2d/recurrence.hpp"

namespace cheb2d {

LaurentMatrixPolynomial::LaurentMatrixPolynomial(int rows, int cols)
    : rows_(rows), cols_(cols) {}

LaurentMatrixPolynomial::LaurentMatrixPolynomial(int low_power,
                                                 std::vector<CMatrix> coeffs)
    : low_(low_power), c_(std::move(coeffs)) {
  if (c_.empty()) throw Error("LaurentMatrixPolynomial: empty coefficient list");
  rows_ = static_cast<int>(c_.front().rows());
  cols_ = static_cast<int>(c_.front().cols());
}

LaurentMatrixPolynomial LaurentMatrixPolynomial::constant(const CMatrix& c) {
  return {0, {c}};
}

LaurentMatrixPolynomial LaurentMatrixPolynomial::monomial(const CMatrix& c,
                                                          int power) {
  return {power, {c}};
}

LaurentMatrixPolynomial LaurentMatrixPolynomial::from_joukowski(
    const MatrixPolynomial& p) {
  const int r = static_cast<int>(p.coeffs.front().rows());
  const int c = static_cast<int>(p.coeffs.front().cols());
  const CMatrix half = 0.5 * CMatrix::Identity(c, c);
  const LaurentMatrixPolynomial x(-1, {half, CMatrix::Zero(c, c), half});
  LaurentMatrixPolynomial acc(r, c);
  for (auto it = p.coeffs.rbegin(); it != p.coeffs.rend(); ++it)
    acc = acc * x + constant(it->cast<cplx>());
  return acc;
}

CMatrix LaurentMatrixPolynomial::coefficient(int k) const {
  if (k < low_ || k > high_power()) return CMatrix::Zero(rows_, cols_);
  return c_[k - low_];
}

CMatrix LaurentMatrixPolynomial::eval(cplx z) const {
  if (c_.empty()) return CMatrix::Zero(rows_, cols_);
  if (z == cplx(0.0) && low_ < 0)
    throw ZeroArgument("Laurent polynomial with negative powers at z = 0");
  CMatrix acc = CMatrix::Zero(rows_, cols_);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
  return acc * std::pow(z, low_);
}

LaurentMatrixPolynomial LaurentMatrixPolynomial::shifted(int k) const {
  LaurentMatrixPolynomial out = *this;
  out.low_ += k;
  return out;
}

LaurentMatrixPolynomial LaurentMatrixPolynomial::transposed() const {
  LaurentMatrixPolynomial out(cols_, rows_);
  out.low_ = low_;
  for (const auto& c : c_) out.c_.push_back(c.transpose());
  return out;
}

LaurentMatrixPolynomial LaurentMatrixPolynomial::reflected() const {
  if (c_.empty()) return *this;
  std::vector<CMatrix> rev(c_.rbegin(), c_.rend());
  return {-high_power(), std::move(rev)};
}

LaurentMatrixPolynomial LaurentMatrixPolynomial::trimmed(double tol) const {
  auto small = [tol](const CMatrix& c) { return max_abs(c) <= tol; };
  std::size_t lo = 0, hi = c_.size();
  while (lo < hi && small(c_[lo])) ++lo;
  while (hi > lo && small(c_[hi - 1])) --hi;
  LaurentMatrixPolynomial out(rows_, cols_);
  if (lo == hi) return out;
  out.low_ = low_ + static_cast<int>(lo);
  out.c_.assign(c_.begin() + lo, c_.begin() + hi);
  return out;
}

LaurentMatrixPolynomial LaurentMatrixPolynomial::operator+(
    const LaurentMatrixPolynomial& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const int lo = std::min(low_, o.low_);
  const int hi = std::max(high_power(), o.high_power());
  std::vector<CMatrix> c;
  for (int k = lo; k <= hi; ++k) c.push_back(coefficient(k) + o.coefficient(k));
  return {lo, std::move(c)};
}

LaurentMatrixPolynomial LaurentMatrixPolynomial::operator-(
    const LaurentMatrixPolynomial& o) const {
  return *this + o * cplx(-1.0);
}

LaurentMatrixPolynomial LaurentMatrixPolynomial::operator*(
    const LaurentMatrixPolynomial& o) const {
  if (is_zero() || o.is_zero()) return LaurentMatrixPolynomial(rows_, o.cols_);
  std::vector<CMatrix> c(c_.size() + o.c_.size() - 1,
                         CMatrix::Zero(rows_, o.cols_));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return {low_ + o.low_, std::move(c)};
}

LaurentMatrixPolynomial LaurentMatrixPolynomial::operator*(cplx s) const {
  LaurentMatrixPolynomial out = *this;
  for (auto& c : out.c_) c *= s;
  return out;
}

LaurentMatrixPolynomial operator*(const CMatrix& m,
                                  const LaurentMatrixPolynomial& p) {
  LaurentMatrixPolynomial out(static_cast<int>(m.rows()), p.cols());
  if (p.is_zero()) return out;
  out.low_ = p.low_;
  for (const auto& c : p.c_) out.c_.push_back(m * c);
  return out;
}

}  // namespace cheb2d
