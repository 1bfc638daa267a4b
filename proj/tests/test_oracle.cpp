#include "doctest.h"

#include <cmath>

#include "cheb2d/bipoly.hpp"
#include "cheb2d/linalg.hpp"
#include "cheb2d/measures.hpp"
#include "cheb2d/oracle.hpp"
#include "cheb2d/recurrence.hpp"

using namespace cheb2d;

TEST_SUITE("oracle") {
  TEST_CASE("bivariate polynomial arithmetic") {
    BivariatePolynomial p;
    p.c = Matrix::Zero(2, 2);
    p.c(0, 1) = 2.0;  // 2y
    p.c(1, 0) = -1.0; // -x
    CHECK(p.eval(0.5, 0.25) == doctest::Approx(0.0));
    CHECK(p.times_x().eval(2.0, 1.0) == doctest::Approx(0.0));
    CHECK(p.times_y().eval(1.0, 3.0) == doctest::Approx(15.0));
    CHECK(p.swapped().eval(0.25, 0.5) == doctest::Approx(0.0));

    const MomentForm form(moments(measure_product_chebyshev(), 4, 4, 64));
    CHECK(form.pair(p, p) == doctest::Approx(1.0 + 0.25));
  }

  TEST_CASE("chebyshev-2 values") {
    const Vector u = chebyshev_u(3, 0.5);
    CHECK(u(0) == 1.0);
    CHECK(u(1) == doctest::Approx(1.0));
    CHECK(u(2) == doctest::Approx(0.0));
    CHECK(u(3) == doctest::Approx(-1.0));
  }

  TEST_CASE("lex gram-schmidt on the product measure") {
    const Matrix h = moments(measure_product_chebyshev(), 6, 6, 128);
    const auto P = lex_polynomials(h, 3, 3);
    REQUIRE(P.size() == 4);
    CHECK(P[0].comps[0].c(0, 0) == doctest::Approx(1.0));
    const double x = 0.3, y = -0.65;
    for (int n = 0; n <= 3; ++n) {
      const Vector v = P[n].eval(x, y);
      const Vector ux = chebyshev_u(3, x), uy = chebyshev_u(3, y);
      for (int l = 0; l <= 3; ++l) CHECK(v(l) == doctest::Approx(ux(n) * uy(l)).epsilon(1e-10));
    }
  }

  TEST_CASE("lex gram-schmidt matches the recurrence") {
    for (const auto& fam : {DeformationFamily::one_param(0.6), DeformationFamily::two_param(0.3, 1.0)}) {
      const auto op = jacobi_operator(fam, 3);
      const Matrix h = moments(measure_for_family(fam), 6, 6, 512);
      const auto gs = lex_polynomials(h, 3, 3);
      const auto rec = recurrence_polynomials(op, 3);
      for (int n = 0; n <= 3; ++n) CHECK(max_coeff_diff(gs[n], rec[n]) < 1e-8);
    }
  }

  TEST_CASE("tilde polynomials mirror the lex ones for one-param") {
    const Matrix h = moments(measure_one_param(0.6), 8, 8, 256);
    for (int n = 1; n <= 3; ++n)
      for (int m = 1; m <= 3; ++m) {
        const auto t = tilde_polynomials(h, n, m);
        REQUIRE(static_cast<int>(t.size()) == m + 1);
        const auto lex = lex_polynomials(h, m, n)[m].swapped();
        CHECK(max_coeff_diff(t[m], lex) < 1e-9);
      }
  }

  TEST_CASE("lex step coefficients from the measure") {
    const auto fam = DeformationFamily::one_param(0.6);
    const auto c = thm22_coefficients(measure_for_family(fam), 2, 2, 256);
    const auto want = lex_step_coefficients(fam, 2, 2);
    CHECK(max_abs(c.K - want.K) < 1e-9);
    CHECK(max_abs(c.J1 - want.J1) < 1e-9);
    CHECK(max_abs(c.J2) < 1e-9);
    CHECK(max_abs(c.J3 + c.K * c.A_tilde.transpose()) < 1e-9);

    const auto op = jacobi_operator(fam, 2);
    CHECK(max_abs(c.A - op.A(2)) < 1e-9);
    CHECK(max_abs(c.B - op.B(2)) < 1e-9);

    const auto [imax, jmax] = thm22_moment_orders(2, 2);
    const Matrix h = moments(measure_for_family(fam), imax, jmax, 256);
    for (const auto& [key, v] : residuals_recurrences(h, c, 3, 100)) CHECK_MESSAGE(v < 1e-8, key);
  }

  TEST_CASE("chebyshev lex step") {
    const auto c = thm22_coefficients(measure_product_chebyshev(), 2, 3, 128);
    CHECK(max_abs(c.J2) < 1e-12);
    CHECK(max_abs(c.K) < 1e-12);
  }

  TEST_CASE("total-degree gram-schmidt") {
    const Matrix h = moments(measure_product_chebyshev(), 4, 4, 128);
    const auto basis = gram_schmidt_totaldeg(h, 2);
    REQUIRE(basis.P.size() == 3);
    CHECK(basis.P[0].eval(0.1, 0.2)(0) == doctest::Approx(1.0));
    const Vector p1 = basis.P[1].eval(0.3, -0.4);
    CHECK(p1(0) == doctest::Approx(-0.8));
    CHECK(p1(1) == doctest::Approx(0.6));

    const auto fam = DeformationFamily::one_param(0.6);
    const Matrix h1 = moments(measure_for_family(fam), 8, 8, 256);
    const auto b1 = gram_schmidt_totaldeg(h1, 4);
    for (int n = 0; n < 3; ++n) {
      const auto got = extract_total_degree(h1, b1, n);
      const auto want = total_degree_coeffs(fam, n);
      CHECK(max_abs(got.Ax - want.Ax) < 1e-8);
      CHECK(max_abs(got.Ay - want.Ay) < 1e-8);
      CHECK(max_abs(got.Bx - want.Bx) < 1e-8);
      CHECK(max_abs(got.By - want.By) < 1e-8);
    }
  }

  TEST_CASE("phi identities") {
    const auto samples = phi_samples(100, 11);
    REQUIRE(samples.size() == 100);
    for (const auto& s : samples) {
      CHECK(std::abs(std::abs(s.z) - 1.0) < 1e-15);
      CHECK(std::abs(s.y) < 1.0);
    }
    for (int m = 1; m <= 4; ++m)
      for (const auto& [key, v] : phi_identity_check(0.6, m, samples)) CHECK_MESSAGE(v < 1e-10, key);
    // near the free limit the top component is U_m / z
    for (const auto& [key, v] : phi_identity_check(1e-9, 3, phi_samples(20, 2)))
      CHECK_MESSAGE(v < 1e-10, key);
  }
}
