#include "doctest.h"

#include "cheb2d/json_io.hpp"
#include "cheb2d/linalg.hpp"
#include "cheb2d/verify.hpp"

using namespace cheb2d;

TEST_SUITE("io") {
  TEST_CASE("matrix json round trip") {
    Matrix a(2, 3);
    a << 0.1, -2.0 / 3.0, 1e-300, 4.0, 0.0, -7.25;
    const json j = matrix_to_json(a);
    CHECK(j["rows"] == 2);
    CHECK(j["cols"] == 3);
    CHECK(j["data"].size() == 2);
    CHECK(j["data"][0].size() == 3);
    const Matrix b = matrix_from_json(json::parse(dump_json(j)));
    CHECK(max_abs(a - b) == 0.0);
  }

  TEST_CASE("malformed matrices are rejected") {
    json j = {{"rows", 2}, {"cols", 2}, {"data", {{1.0, 2.0}}}};
    CHECK_THROWS(matrix_from_json(j));
  }

  TEST_CASE("sequences") {
    const json j = matrices_to_json({Matrix::Identity(2, 2), Matrix::Zero(2, 2)});
    REQUIRE(j.is_array());
    CHECK(j.size() == 2);
    CHECK(j[0]["data"][1][1] == 1.0);
  }

  TEST_CASE("verification report") {
    VerifyOptions o;
    o.n = 2;
    o.m = 1;
    o.nodes = 128;
    const auto rep = run_verification(DeformationFamily::chebyshev(), o);
    CHECK(rep.pass());
    const json j = report_to_json(rep);
    CHECK(j["pass"] == true);
    CHECK(j["checks"]["orthonormality"]["pass"] == true);
  }
}
