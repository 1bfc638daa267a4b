#pragma once

#include <cmath>
#include <numbers>

namespace cheb2d {

template <typename F>
LaurentMatrixPolynomial laurent_interpolate(F&& f, int low, int high) {
  const int count = high - low + 1;
  std::vector<CMatrix> samples;
  samples.reserve(count);
  for (int j = 0; j < count; ++j) {
    const double t = 2.0 * std::numbers::pi * j / count;
    samples.push_back(f(std::polar(1.0, t)));
  }
  std::vector<CMatrix> coeffs;
  for (int k = low; k <= high; ++k) {
    CMatrix acc = CMatrix::Zero(samples[0].rows(), samples[0].cols());
    for (int j = 0; j < count; ++j)
      acc += samples[j] * std::polar(1.0, -2.0 * std::numbers::pi * j * k / count);
    coeffs.push_back(acc / static_cast<double>(count));
  }
  return LaurentMatrixPolynomial(low, std::move(coeffs));
}

}  // namespace cheb2d
