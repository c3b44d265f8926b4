#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "redlab/error.hpp"
#include "redlab/hjcf.hpp"

using namespace redlab;
using redlab::testing::chain_matrix;
using redlab::testing::continued_fraction_value;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) {
  std::vector<Integer> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("HJString validation") {
  CHECK_THROWS_AS(HJString(std::vector<int>{}), Error);
  CHECK_THROWS_AS(HJString({2, 1, 3}), Error);
  CHECK(HJString({2, 3, 2}).to_string() == "[2,3,2]");
  CHECK(normalized(HJString({3, 2, 2})) == HJString({2, 2, 3}));
  CHECK(normalized(HJString({2, 2, 3})) == HJString({2, 2, 3}));
}

TEST_CASE("hj_eval examples") {
  for (int n = 2; n <= 9; ++n) CHECK(hj_eval(HJString({n})) == HJFraction{n, 1});
  for (int l = 1; l <= 10; ++l) {
    CHECK(hj_eval(HJString(std::vector<int>(static_cast<std::size_t>(l), 2))) == HJFraction{l + 1, l});
    std::vector<int> w(static_cast<std::size_t>(l - 1), 2);
    w.push_back(3);
    CHECK(hj_eval(HJString(w)) == HJFraction{2 * l + 1, 2 * l - 1});
  }
  CHECK(hj_eval(HJString({2, 3, 2})) == HJFraction{8, 5});
}

TEST_CASE("hj_eval agrees with direct continued-fraction evaluation") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 500; ++t) {
    const auto s = testing::random_string(rng, 9, 9);
    const auto f = hj_eval(s);
    REQUIRE(Rational(f.q, f.q1) == continued_fraction_value(s.weights()));
    Integer g;
    mpz_gcd(g.get_mpz_t(), f.q.get_mpz_t(), f.q1.get_mpz_t());
    REQUIRE(g == 1);
  }
}

TEST_CASE("hj_expand examples and errors") {
  CHECK(hj_expand(7, 1) == HJString({7}));
  CHECK(hj_expand(8, 5) == HJString({2, 3, 2}));
  for (int q = 2; q <= 20; ++q)
    CHECK(hj_expand(q, q - 1) == HJString(std::vector<int>(static_cast<std::size_t>(q - 1), 2)));
  CHECK_THROWS_AS(hj_expand(6, 4), Error);  // not coprime
  CHECK_THROWS_AS(hj_expand(5, 5), Error);
  CHECK_THROWS_AS(hj_expand(5, 0), Error);
  CHECK_THROWS_AS(hj_expand(5, 7), Error);
}

TEST_CASE("hj_expand rejects overlong expansions") {
  const Integer q("100000000000000000000001");
  try {
    hj_expand(q, q - 1);
    FAIL("expected BadFraction");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::BadFraction);
  }
  CHECK(hj_expand(Integer(1001), Integer(1000)).length() == 1000);
}

TEST_CASE("hj_expand and hj_eval are inverse") {
  for (int q = 2; q <= 60; ++q)
    for (int q1 = 1; q1 < q; ++q1) {
      Integer g;
      mpz_gcd_ui(g.get_mpz_t(), Integer(q).get_mpz_t(), static_cast<unsigned long>(q1));
      if (g != 1) continue;
      REQUIRE(hj_eval(hj_expand(q, q1)) == HJFraction{q, q1});
    }
  std::mt19937_64 rng(6);
  for (int t = 0; t < 300; ++t) {
    const auto s = testing::random_string(rng, 10, 8);
    const auto f = hj_eval(s);
    REQUIRE(hj_expand(f.q, f.q1) == s);
  }
}

TEST_CASE("uv_sequences examples") {
  const auto single = uv_sequences(HJString({5}));
  CHECK(single.u == ints({0, 1, 5}));
  CHECK(single.v == ints({5, 1, 0}));

  const auto d = uv_sequences(HJString({2, 3, 2}));
  CHECK(d.u == ints({0, 1, 2, 5, 8}));
  CHECK(d.v == ints({8, 5, 2, 1, 0}));
  CHECK(d.q == 8);
  CHECK(d.q1 == 5);

  for (int l = 1; l <= 8; ++l) {
    std::vector<int> w(static_cast<std::size_t>(l - 1), 2);
    w.push_back(3);
    const auto e = uv_sequences(HJString(w));
    CHECK(e.q == 2 * l + 1);
    for (int i = 1; i <= l; ++i) {
      CHECK(e.u[static_cast<std::size_t>(i)] == i);
      CHECK(e.v[static_cast<std::size_t>(i)] == 2 * l - 2 * i + 1);
    }
  }
}

TEST_CASE("minor_det examples") {
  const HJString s({2, 3, 2});
  CHECK(minor_det(s, {1, 2, 3}) == 1);
  CHECK(minor_det(s, {1}) == 5);
  CHECK(minor_det(s, {}) == 8);
  CHECK(minor_det(s, {2}) == 4);  // two disjoint [2]'s
  CHECK_THROWS_AS(minor_det(s, {4}), Error);
}

TEST_CASE("u and v are leading and trailing minors") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 200; ++t) {
    const auto s = testing::random_string(rng, 8, 7);
    const std::size_t l = s.length();
    const auto d = uv_sequences(s);
    for (std::size_t i = 2; i <= l; ++i) {
      std::set<std::size_t> tail, head;
      for (std::size_t j = i; j <= l; ++j) tail.insert(j);
      REQUIRE(d.u[i] == minor_det(s, tail));
    }
    for (std::size_t i = 1; i + 1 <= l; ++i) {
      std::set<std::size_t> head;
      for (std::size_t j = 1; j <= i; ++j) head.insert(j);
      REQUIRE(d.v[i] == minor_det(s, head));
    }
    REQUIRE(d.q == abs(det(chain_matrix(s.weights()))).numerator());
  }
}

TEST_CASE("minor identities on random strings") {
  std::mt19937_64 rng(10);
  for (int t = 0; t < 300; ++t) {
    const auto s = testing::random_string(rng, 8, 8);
    const std::size_t l = s.length();
    const auto d = uv_sequences(s);
    for (std::size_t i = 0; i <= l; ++i) REQUIRE(d.v[i] * d.u[i + 1] - d.v[i + 1] * d.u[i] == d.q);
    for (std::size_t i = 1; i <= l; ++i) {
      const Integer bumped = hj_eval(s.incremented(i)).q;
      REQUIRE(bumped == d.v[i] * d.u[i] + d.q);
      REQUIRE(bumped > d.q);
    }
    if (l >= 2 && s.at(1) >= 3) REQUIRE(d.v[1] + d.v[2] < d.q);
  }
}
