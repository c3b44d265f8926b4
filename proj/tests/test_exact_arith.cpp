#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "redlab/error.hpp"
#include "redlab/matrix.hpp"

using namespace redlab;
using redlab::testing::chain_matrix;
using redlab::testing::cofactor_det;

namespace {

Rational q(long p, long d) { return Rational(Integer(p), Integer(d)); }

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an Error");
  return ErrorCode::InvalidInput;
}

}  // namespace

TEST_CASE("rational is always reduced with a positive denominator") {
  const Rational r(Integer(6), Integer(-4));
  CHECK(r.numerator() == -3);
  CHECK(r.denominator() == 2);
  CHECK(r.to_string() == "-3/2");
  CHECK(Rational(Integer(8), Integer(4)).to_string() == "2");
  CHECK(Rational::parse(" 10/4 ") == q(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(code_of([] { Rational::parse("1/0"); }) == ErrorCode::BadFraction);
  CHECK(code_of([] { Rational::parse("x/2"); }) == ErrorCode::BadFraction);
  CHECK(code_of([] { Rational::parse("3/-2"); }) == ErrorCode::BadFraction);
  CHECK(floor(q(-7, 2)) == -4);
  CHECK(floor(q(7, 2)) == 3);
}

TEST_CASE("det examples") {
  CHECK(det(Matrix{{-2}}) == Rational(-2));
  CHECK(det(Matrix{{-2, 1}, {1, -2}}) == Rational(3));
  CHECK(det(chain_matrix({2, 3, 2})) == Rational(-8));
  CHECK(det(Matrix{{0, 1}, {1, 0}}) == Rational(-1));  // needs a row swap
  CHECK(det(Matrix{{1, 1}, {1, 1}}) == Rational(0));
}

TEST_CASE("det of long chains does not overflow") {
  // [12,...,12] of length 40: |det| = u_41 grows like 12^40.
  const auto m = chain_matrix(std::vector<int>(40, 12));
  const Rational d = det(m);
  Integer prev = 0, cur = 1;
  for (int i = 0; i < 40; ++i) {
    Integer next = 12 * cur - prev;
    prev = cur;
    cur = next;
  }
  CHECK(d == Rational(cur));  // (-1)^40 = 1
  CHECK(cur.get_str().size() > 40);
}

TEST_CASE("det agrees with cofactor expansion up to dimension 5") {
  std::mt19937_64 rng(0xB4E155);
  std::uniform_int_distribution<long> entry(-6, 6), denom(1, 4);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        m(i, j) = trial % 3 == 0 ? Rational(Integer(entry(rng)), Integer(denom(rng))) : Rational(entry(rng));
    // force some singular and some pivot-needing cases
    if (trial % 7 == 0 && n > 1)
      for (std::size_t j = 0; j < n; ++j) m(n - 1, j) = m(0, j);
    if (trial % 11 == 0) m(0, 0) = Rational(0);
    REQUIRE(det(m) == cofactor_det(m));
  }
}

TEST_CASE("solve_linear examples") {
  const Vector b{Rational(3), q(-1, 2), Rational(7)};
  CHECK(solve_linear(Matrix::identity(3), b) == b);

  const Vector rhs{Rational(0), Rational(0), Rational(-1), Rational(0)};
  const Vector expected{q(2, 11), q(4, 11), q(6, 11), q(3, 11)};
  CHECK(solve_linear(chain_matrix({2, 2, 3, 2}), rhs) == expected);

  const Vector two{Rational(1), Rational(2)};
  CHECK(code_of([&] { solve_linear(Matrix{{1, 1}, {1, 1}}, two); }) == ErrorCode::SingularMatrix);
  CHECK(code_of([&] { solve_linear(Matrix{{1, 1}, {1, 1}}, b); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("solve_linear round trip is exact") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> entry(-9, 9), denom(1, 5);
  int solved = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
    Matrix m(n);
    Vector b(n);
    for (std::size_t i = 0; i < n; ++i) {
      b[i] = Rational(Integer(entry(rng)), Integer(denom(rng)));
      for (std::size_t j = 0; j < n; ++j) m(i, j) = Rational(Integer(entry(rng)), Integer(denom(rng)));
    }
    if (det(m).is_zero()) continue;
    const Vector x = solve_linear(m, b);
    REQUIRE(m * x == b);
    ++solved;
  }
  CHECK(solved > 250);
}

TEST_CASE("is_negative_definite") {
  CHECK(is_negative_definite(Matrix{{-2, 1}, {1, -2}}));
  CHECK(is_negative_definite(Matrix{{-1}}));
  // affine D4: centre 2 with four weight-2 leaves
  const Matrix d4{{-2, 1, 1, 1, 1}, {1, -2, 0, 0, 0}, {1, 0, -2, 0, 0}, {1, 0, 0, -2, 0}, {1, 0, 0, 0, -2}};
  CHECK(det(d4) == Rational(0));
  CHECK_FALSE(is_negative_definite(d4));
  CHECK_FALSE(is_negative_definite(Matrix{{1}}));
  CHECK_FALSE(is_negative_definite(Matrix{{-1, 2}, {2, -1}}));
  CHECK(code_of([] { is_negative_definite(Matrix{{-2, 1}, {0, -2}}); }) == ErrorCode::NotSymmetric);
}

TEST_CASE("negative definiteness matches the minor definition") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> diag(-6, 1), off(-1, 2);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
    Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = Rational(diag(rng));
      for (std::size_t j = i + 1; j < n; ++j) m(i, j) = m(j, i) = Rational(off(rng));
    }
    bool by_minors = true;
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<std::size_t> lead(k);
      for (std::size_t i = 0; i < k; ++i) lead[i] = i;
      const int s = cofactor_det(m.principal(lead)).sign();
      if (s != (k % 2 == 1 ? -1 : 1)) by_minors = false;
    }
    REQUIRE(is_negative_definite(m) == by_minors);
  }
}
