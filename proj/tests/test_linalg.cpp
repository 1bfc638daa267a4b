#include "doctest.h"

#include "cheb2d/errors.hpp"
#include "cheb2d/linalg.hpp"
#include "cheb2d/parallel.hpp"

using namespace cheb2d;

TEST_SUITE("linalg") {
  TEST_CASE("cholesky of the identity is the identity") {
    const Matrix l = cholesky_lower(Matrix::Identity(3, 3));
    CHECK(max_abs(l - Matrix::Identity(3, 3)) == 0.0);
  }

  TEST_CASE("cholesky of a 2x2") {
    Matrix a(2, 2);
    a << 4, 2, 2, 2;
    Matrix want(2, 2);
    want << 2, 0, 1, 1;
    const Matrix l = cholesky_lower(a);
    CHECK(max_abs(l - want) < 1e-15);
    CHECK(max_abs(l * l.transpose() - a) < 1e-15);
    CHECK(is_lower_triangular(l));
  }

  TEST_CASE("indefinite matrix is rejected") {
    Matrix a(2, 2);
    a << 1, 2, 2, 1;
    CHECK_THROWS_AS(cholesky_lower(a), NotPositiveDefinite);
  }

  TEST_CASE("reverse cholesky factors a = l^t l") {
    Matrix a(3, 3);
    a << 4, 1, 0.5, 1, 3, 0.2, 0.5, 0.2, 2;
    const Matrix l = reverse_cholesky_lower(a);
    CHECK(is_lower_triangular(l));
    CHECK(max_abs(l.transpose() * l - a) < 1e-14);
  }

  TEST_CASE("lower triangular solve") {
    Matrix b = Matrix::Random(3, 2);
    CHECK(max_abs(solve_lower_triangular(Matrix::Identity(3, 3), b) - b) == 0.0);

    Matrix l(2, 2);
    l << 2, 0, 1, 1;
    Matrix rhs(2, 1);
    rhs << 2, 2;
    const Matrix x = solve_lower_triangular(l, rhs);
    CHECK(x(0, 0) == doctest::Approx(1.0));
    CHECK(x(1, 0) == doctest::Approx(1.0));

    Matrix sing(2, 2);
    sing << 1, 0, 3, 0;
    CHECK_THROWS_AS(solve_lower_triangular(sing, rhs), SingularMatrix);
  }

  TEST_CASE("hilbert-schmidt norm") {
    CHECK(hs_norm(Matrix::Zero(3, 3)) == 0.0);
    CHECK(hs_norm(Matrix::Identity(4, 4)) == doctest::Approx(2.0));
    Matrix r(1, 2);
    r << 3, 4;
    CHECK(hs_norm(r) == doctest::Approx(5.0));
  }

  TEST_CASE("deterministic reduce does not depend on the thread count") {
    auto sum = [](int lo, int hi) {
      double s = 0.0;
      for (int i = lo; i < hi; ++i) s += 1.0 / (1.0 + i);
      return s;
    };
    auto add = [](double a, double b) { return a + b; };
    const double a = deterministic_reduce<double>(10007, sum, add);
    setenv("CHEB2D_THREADS", "1", 1);
    const double b = deterministic_reduce<double>(10007, sum, add);
    unsetenv("CHEB2D_THREADS");
    CHECK(a == b);
  }

  TEST_CASE("worker exceptions reach the caller") {
    auto boom = [](int lo, int) -> double {
      if (lo > 0) throw SingularMatrix("boom");
      return 0.0;
    };
    CHECK_THROWS_AS(deterministic_reduce<double>(1000, boom, std::plus<double>()),
                    SingularMatrix);
  }
}
