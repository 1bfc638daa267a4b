#include "cheb2d/quadrature.hpp"

#include <cmath>
#include <numbers>

#include "cheb2d/errors.hpp"

namespace cheb2d {

QuadratureRule gauss_chebyshev2(int n) {
  if (n < 1) throw Error("gauss_chebyshev2: need at least one node");
  QuadratureRule q;
  q.nodes.resize(n);
  q.weights.resize(n);
  const double h = std::numbers::pi / (n + 1);
  for (int k = 1; k <= n; ++k) {
    const double s = std::sin(k * h);
    q.nodes[k - 1] = std::cos(k * h);
    q.weights[k - 1] = 2.0 / (n + 1) * s * s;
  }
  return q;
}

QuadratureRule quadrature_rule(QuadratureKind kind, int n) {
  switch (kind) {
    case QuadratureKind::chebyshev2:
      return gauss_chebyshev2(n);
  }
  throw Error("quadrature_rule: unknown kind");
}

}  // namespace cheb2d
