#include "doctest.h"

#include <cmath>
#include <numbers>

#include "cheb2d/errors.hpp"
#include "cheb2d/linalg.hpp"
#include "cheb2d/measures.hpp"
#include "cheb2d/quadrature.hpp"
#include "cheb2d/recurrence.hpp"

using namespace cheb2d;

namespace {

double cheb2_weight(double t) { return (2.0 / std::numbers::pi) * std::sqrt(1.0 - t * t); }

}  // namespace

TEST_SUITE("quadrature") {
  TEST_CASE("gauss chebyshev-2 rule") {
    const auto r = gauss_chebyshev2(64);
    REQUIRE(r.size() == 64);
    double mass = 0.0, second = 0.0, odd = 0.0;
    for (int k = 0; k < r.size(); ++k) {
      mass += r.weights[k];
      second += r.weights[k] * r.nodes[k] * r.nodes[k];
      odd += r.weights[k] * std::pow(r.nodes[k], 5);
    }
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(second == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(std::abs(odd) < 1e-15);
    CHECK(quadrature_rule(QuadratureKind::chebyshev2, 5).nodes == gauss_chebyshev2(5).nodes);
  }

  TEST_CASE("exact for U_j U_k up to degree 2n-1") {
    const int n = 8;
    const auto r = gauss_chebyshev2(n);
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        if (j + k > 2 * n - 1) continue;
        double acc = 0.0;
        for (int i = 0; i < n; ++i) {
          const double th = std::acos(r.nodes[i]);
          acc += r.weights[i] * std::sin((j + 1) * th) * std::sin((k + 1) * th) /
                 std::pow(std::sin(th), 2);
        }
        CHECK(std::abs(acc - (j == k ? 1.0 : 0.0)) < 1e-13);
      }
  }
}

TEST_SUITE("measures") {
  TEST_CASE("one-param density") {
    for (double x : {-0.7, 0.1, 0.5})
      for (double y : {-0.2, 0.9}) {
        const double prod = cheb2_weight(x) * cheb2_weight(y);
        CHECK(measure_product_chebyshev().ac_density(x, y) == doctest::Approx(prod));
        CHECK(mu0(0.0, x, y) == 1.0);
      }
    CHECK(density_one_param(0.6, 0.0, 0.0) ==
          doctest::Approx(4.0 / (std::numbers::pi * std::numbers::pi * 0.64)).epsilon(1e-14));
    CHECK(density_one_param(0.6, 0.0, 0.0) == doctest::Approx(0.63326).epsilon(1e-5));
    CHECK(density_one_param(0.6, 1.2, 0.0) == 0.0);
    CHECK(measure_one_param(0.6).ac_density(0.3, -0.4) == doctest::Approx(density_one_param(0.6, 0.3, -0.4)));
  }

  TEST_CASE("two-param singular line") {
    const auto mu = measure_two_param(0.3, 1.0);
    REQUIRE(mu.lines.size() == 1);
    CHECK(mu.lines[0].x0 == doctest::Approx(1.25));
    const double want = 1.5 / std::numbers::pi * mu0(0.3, 1.25, 0.0);
    CHECK(mu.line_density(0, 0.0) == doctest::Approx(want).epsilon(1e-14));
    CHECK(measure_two_param(0.3, -1.0).lines[0].x0 == doctest::Approx(-1.25));
    CHECK(two_param_line_formula_exact(0.3, 1.0));
    CHECK(two_param_line_formula_exact(0.5, 0.75));
    CHECK_FALSE(two_param_line_formula_exact(0.6, 1.0));
    CHECK(measure_for_family(DeformationFamily::one_param(0.6)).lines.empty());
  }

  TEST_CASE("inner products against the recurrence") {
    const auto fam = DeformationFamily::one_param(0.6);
    const auto op = jacobi_operator(fam, 2);
    const auto mu = measure_for_family(fam);
    auto p = [&](int n) {
      return VectorField([&, n](double x, double y) { return eval_vector_poly(op, n, x, y).value; });
    };
    CHECK(max_abs(gram_matrix(p(0), mu, 256) - Matrix::Identity(3, 3)) < 1e-8);
    CHECK(max_abs(inner_product(p(1), p(0), mu, 256)) < 1e-8);
    CHECK(max_abs(inner_product(p(2), p(2), mu, 256) - Matrix::Identity(3, 3)) < 1e-8);

    auto one = VectorField([](double, double) { return Vector::Ones(1); });
    CHECK(gram_matrix(one, measure_product_chebyshev(), 64)(0, 0) == doctest::Approx(1.0));
  }

  TEST_CASE("separable gram matrix matches the direct one") {
    const auto fam = DeformationFamily::two_param(0.3, 1.0);
    const auto op = jacobi_operator(fam, 2);
    const auto mu = measure_for_family(fam);
    const auto xfac = [&](double x) {
      const auto p = eval_matrix_polys(op, 3, x);
      Matrix out(6, 3);
      out << p[2] * op.y_basis(), p[3] * op.y_basis();
      return out;
    };
    const auto yfac = [](double y) { return Vector(Vector::LinSpaced(3, 0, 2).unaryExpr([y](double k) { return std::pow(y, k); })); };
    auto direct = VectorField([&](double x, double y) { return Vector(xfac(x) * yfac(y)); });
    const Matrix a = gram_separable(xfac, yfac, mu, 128);
    const Matrix b = gram_matrix(direct, mu, 128);
    CHECK(max_abs(a - b) < 1e-12);
    CHECK(max_abs(a - Matrix::Identity(6, 6)) < 1e-8);
  }

  TEST_CASE("matrix slices") {
    const auto prod = measure_product_chebyshev();
    const double x = 0.35;
    const Matrix s = matrix_measure_slice(prod, 2, x, 256);
    CHECK(s(0, 0) == doctest::Approx(cheb2_weight(x)).epsilon(1e-13));
    CHECK(s(1, 1) == doctest::Approx(0.25 * cheb2_weight(x)).epsilon(1e-13));
    CHECK(std::abs(s(0, 1)) < 1e-15);
    CHECK(is_symmetric(s, 1e-15));
  }

  TEST_CASE("moment tables") {
    const Matrix h0 = moments(measure_product_chebyshev(), 0, 0, 64);
    REQUIRE(h0.rows() == 1);
    CHECK(h0(0, 0) == doctest::Approx(1.0));
    const Matrix h = moments(measure_one_param(0.6), 4, 4, 512);
    CHECK(h(1, 1) == doctest::Approx(0.15).epsilon(1e-12));
    CHECK(h(2, 0) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(std::abs(h(1, 0)) < 1e-15);

    // the line carries mass
    const auto mu = measure_two_param(0.3, 1.0);
    InnerProductOptions no_lines;
    no_lines.include_lines = false;
    const Matrix with = moments(mu, 2, 2, 256);
    const Matrix without = moments(mu, 2, 2, 256, no_lines);
    CHECK(with(0, 0) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(with(0, 0) - without(0, 0) > 1e-2);
  }

  TEST_CASE("doubly hankel structure") {
    const Matrix h = moments(measure_one_param(0.6), 4, 4, 256);
    const auto H = doubly_hankel(h, 2, 2);
    CHECK(H.full.rows() == 9);
    CHECK(H.blocks.size() == 5);
    CHECK(is_symmetric(H.full, 1e-15));
    auto d = hankel_defects(H.full, 2, 2);
    CHECK(d.block == 0.0);
    CHECK(d.inner == 0.0);
    CHECK_NOTHROW(cholesky_lower(H.full));

    Matrix broken = H.full;
    broken(0, 4) += 1e-3;
    broken(4, 0) += 1e-3;
    d = hankel_defects(broken, 2, 2);
    CHECK(std::max(d.block, d.inner) >= 1e-3);

    CHECK_THROWS_AS(doubly_hankel(h, 3, 2), InsufficientMoments);
  }

  TEST_CASE("default node counts") {
    CHECK(default_nodes(DeformationFamily::one_param(0.6)) == 512);
    CHECK(default_nodes(DeformationFamily::one_param(0.9)) == 2048);
  }
}
