#pragma once

#include <vector>

namespace cheb2d {

// Gauss rule for the weight (2/pi) sqrt(1 - t^2) on [-1, 1], total mass 1.
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int size() const { return static_cast<int>(nodes.size()); }
};

enum class QuadratureKind { chebyshev2 };

QuadratureRule gauss_chebyshev2(int n);
QuadratureRule quadrature_rule(QuadratureKind kind, int n);

}  // namespace cheb2d
