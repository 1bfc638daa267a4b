#include "doctest.h"

#include <cmath>

#include "cheb2d/errors.hpp"
#include "cheb2d/linalg.hpp"
#include "cheb2d/parameters.hpp"

using namespace cheb2d;

TEST_SUITE("parameters") {
  TEST_CASE("family validation") {
    CHECK_NOTHROW(DeformationFamily::one_param(0.6).validate());
    CHECK_THROWS_AS(DeformationFamily::one_param(0.0).validate(), InvalidFamily);
    CHECK_THROWS_AS(DeformationFamily::one_param(1.0).validate(), InvalidFamily);
    CHECK_THROWS_AS(DeformationFamily::two_param(0.3, 0.5).validate(), InvalidFamily);
    CHECK_NOTHROW(DeformationFamily::two_param(0.3, -1.0).validate());
    CHECK_THROWS_AS(DeformationFamily::parse("three-param", 0.1, 1.0), InvalidFamily);
    CHECK(DeformationFamily::parse("one_param", 0.2, 1.0).tag == FamilyTag::one_param);
    CHECK(DeformationFamily::parse("two-param", 0.2, 1.0).name() == "two-param");
  }

  TEST_CASE("ledger values") {
    const auto cheb = ledger_for_family(DeformationFamily::chebyshev(), 2, 2);
    CHECK(cheb(0, 0) == 1.0);
    CHECK(cheb(2, 2) == 0.5);
    CHECK(cheb(1, 1) == 0.0);
    CHECK(cheb(0, 1) == 0.0);
    CHECK(cheb(0, 2) == 0.5);

    const auto one = ledger_for_family(DeformationFamily::one_param(0.6), 1, 1);
    CHECK(one(1, 1) == 0.6);
    CHECK(one(2, 1) == 0.0);
    CHECK(one(1, 2) == 0.0);

    const auto two = ledger_for_family(DeformationFamily::two_param(0.6, 1.0), 1, 1);
    CHECK(two(0, 1) == doctest::Approx(0.6));
    CHECK(two(1, 0) == 1.0);
    CHECK(two(2, 0) == 0.5);

    CHECK_THROWS_AS(ledger_for_family(DeformationFamily::one_param(1.5), 1, 1), InvalidFamily);
  }

  TEST_CASE("chebyshev ledger is the s11 -> 0 limit") {
    const auto cheb = ledger_for_family(DeformationFamily::chebyshev(), 3, 3);
    const auto one = ledger_for_family(DeformationFamily::one_param(1e-300), 3, 3);
    CHECK(max_abs(cheb.values - one.values) < 1e-299);
  }

  TEST_CASE("ledger validation") {
    CHECK(validate_ledger(ledger_for_family(DeformationFamily::chebyshev(), 3, 3)).empty());
    CHECK(validate_ledger(ledger_for_family(DeformationFamily::two_param(0.3, 1.0), 3, 3)).empty());

    auto bad = ledger_for_family(DeformationFamily::one_param(0.6), 2, 2);
    bad(1, 1) = 1.0;
    auto v = validate_ledger(bad);
    REQUIRE(v.size() == 1);
    CHECK(v[0].i == 1);
    CHECK(v[0].j == 1);
    CHECK(v[0].condition.find("K_{1,1}") != std::string::npos);

    auto flat = ledger_for_family(DeformationFamily::one_param(0.6), 2, 2);
    flat(2, 2) = 0.0;
    v = validate_ledger(flat);
    REQUIRE(v.size() == 1);
    CHECK(v[0].condition.find("s_{2i,2j} > 0") != std::string::npos);
  }

  TEST_CASE("lex step coefficients") {
    auto c = lex_step_coefficients(DeformationFamily::chebyshev(), 2, 2);
    CHECK(max_abs(c.K) == 0.0);
    Matrix j1(2, 3);
    j1 << 0, 1, 0, 1, 0, 1;
    CHECK(max_abs(c.J1 - 0.5 * j1) == 0.0);
    CHECK(max_abs(c.J2) == 0.0);

    c = lex_step_coefficients(DeformationFamily::one_param(0.6), 1, 1);
    CHECK(c.K.rows() == 1);
    CHECK(c.K(0, 0) == 0.6);
    CHECK(c.J1.cols() == 2);
    CHECK(c.J1(0, 1) == 0.5);

    c = lex_step_coefficients(DeformationFamily::one_param(0.6), 2, 3);
    CHECK(c.K.rows() == 3);
    CHECK(c.K.cols() == 2);
    CHECK(c.K(2, 1) == 0.6);
    CHECK(c.K.cwiseAbs().sum() == doctest::Approx(0.6));
    CHECK(c.J1(2, 1) == doctest::Approx(0.4));
    CHECK(c.J1(1, 0) == 0.5);

    CHECK_THROWS_AS(lex_step_coefficients(DeformationFamily::chebyshev(), 0, 1), Error);
  }

  TEST_CASE("y line jacobi parameters") {
    const auto two = ledger_for_family(DeformationFamily::two_param(0.6, 1.0), 2, 3);
    const auto line = y_line_jacobi(two, 3);
    REQUIRE(line.a.size() == 3);
    CHECK(line.b[0] == doctest::Approx(0.6));
    CHECK(line.b[1] == 0.0);
    CHECK(line.a[0] == 0.5);
  }
}
