#include "doctest.h"
#include "redlab/dual_graph.hpp"
#include "redlab/error.hpp"

using namespace redlab;

namespace {

Rational q(long p, long d) { return Rational(Integer(p), Integer(d)); }

ErrorCode build_error(std::vector<Vertex> v, std::vector<Edge> e) {
  try {
    build_graph(std::move(v), std::move(e));
  } catch (const Error& err) {
    return err.code();
  }
  FAIL("graph unexpectedly valid");
  return ErrorCode::InvalidInput;
}

DualGraph star(int centre, int leaves) {
  std::vector<Vertex> v{{0, centre}};
  std::vector<Edge> e;
  for (int i = 1; i <= leaves; ++i) {
    v.push_back({i, 2});
    e.emplace_back(0, i);
  }
  return build_graph(v, e);
}

}  // namespace

TEST_CASE("build_graph validation") {
  CHECK_NOTHROW(build_graph({{1, 2}, {2, 2}}, {{1, 2}}));
  CHECK(build_error({{0, 2}, {1, 2}, {2, 2}, {3, 2}, {4, 2}}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}) ==
        ErrorCode::NotNegativeDefinite);
  CHECK(build_error({{1, 2}, {2, 1}}, {{1, 2}}) == ErrorCode::WeightTooSmall);
  CHECK(build_error({{1, 2}, {2, 2}}, {}) == ErrorCode::NotConnected);
  CHECK(build_error({{1, 3}, {2, 3}}, {{1, 2}, {2, 1}}) == ErrorCode::Multigraph);
  CHECK(build_error({{1, 3}}, {{1, 1}}) == ErrorCode::Multigraph);
  CHECK(build_error({}, {}) == ErrorCode::InvalidInput);
  CHECK(build_error({{1, 3}, {1, 2}}, {}) == ErrorCode::InvalidInput);
  CHECK(build_error({{1, 3}}, {{1, 7}}) == ErrorCode::InvalidInput);
}

TEST_CASE("non-tree negative definite graphs are accepted") {
  // triangle of weight-3 curves
  const auto g = build_graph({{1, 3}, {2, 3}, {3, 3}}, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(std::holds_alternative<OtherShape>(recognize_shape(g)));
  const auto d = discrepancies(g);
  for (const auto& a : d.values) CHECK(a == Rational(1));
  CHECK(classify(d) == SingularityClass::NonLogTerminal);
}

TEST_CASE("intersection_matrix") {
  CHECK(intersection_matrix(chain_graph(HJString({2, 4}))) == Matrix{{-2, 1}, {1, -4}});
  CHECK(intersection_matrix(chain_graph(HJString({6}))) == Matrix{{-6}});

  // <b;3,1;4,3> at b = 5, in the order E_0, E_1, ..., E_5
  const auto g = bracket_graph(5, HJString({3}), HJString({2, 2, 2}));
  const Matrix expected{{-5, 1, 1, 1, 0, 0}, {1, -2, 0, 0, 0, 0}, {1, 0, -3, 0, 0, 0},
                        {1, 0, 0, -2, 1, 0}, {0, 0, 0, 1, -2, 1}, {0, 0, 0, 0, 1, -2}};
  CHECK(intersection_matrix(g) == expected);
}

TEST_CASE("discrepancies examples") {
  CHECK(discrepancies(chain_graph(HJString({2, 4}))).values == std::vector{q(2, 7), q(4, 7)});
  for (int l = 1; l <= 7; ++l) {
    const auto d = discrepancies(chain_graph(HJString(std::vector<int>(static_cast<std::size_t>(l), 2))));
    for (const auto& a : d.values) CHECK(a.is_zero());
  }
  const auto g = bracket_graph(2, HJString({3}), HJString({2, 2, 2}));
  CHECK(discrepancies(g).values == std::vector{q(4, 5), q(2, 5), q(3, 5), q(3, 5), q(2, 5), q(1, 5)});

  const auto d = discrepancies(d_graph(2, HJString({2, 2, 3})));
  CHECK(d.at(0) == q(1, 2));
  CHECK(d.at(1) == q(1, 2));
}

TEST_CASE("classify") {
  CHECK(classify({{1, 2}, {Rational(0), Rational(0)}}) == SingularityClass::Canonical);
  CHECK(classify({{1, 2, 3}, {q(1, 4), q(1, 2), q(1, 4)}}) == SingularityClass::LogTerminal);
  const auto d = discrepancies(star(3, 4));
  CHECK(d.values == std::vector{Rational(1), q(1, 2), q(1, 2), q(1, 2), q(1, 2)});
  CHECK(classify(d) == SingularityClass::NonLogTerminal);
}

TEST_CASE("recognize_shape") {
  const auto a = recognize_shape(chain_graph(HJString({2, 3, 2})));
  REQUIRE(std::holds_alternative<TypeA>(a));
  CHECK(std::get<TypeA>(a).string == HJString({2, 3, 2}));

  // Chain listed out of order in the file: orientation starts at the end
  // vertex listed first.
  const auto shuffled = build_graph({{7, 2}, {3, 5}, {9, 3}}, {{3, 9}, {9, 7}});
  const auto sa = recognize_shape(shuffled);
  REQUIRE(std::holds_alternative<TypeA>(sa));
  CHECK(std::get<TypeA>(sa).string == HJString({2, 3, 5}));
  CHECK(std::get<TypeA>(sa).order == std::vector{7, 9, 3});

  const auto br = recognize_shape(bracket_graph(4, HJString({2, 2, 2}), HJString({3})));
  REQUIRE(std::holds_alternative<TypeBracket>(br));
  const auto& t = std::get<TypeBracket>(br);
  CHECK(t.b == 4);
  CHECK(t.arm1 == HJString({3}));
  CHECK(t.arm2 == HJString({2, 2, 2}));
  CHECK(hj_eval(t.arm1) == HJFraction{3, 1});
  CHECK(hj_eval(t.arm2) == HJFraction{4, 3});
  CHECK(t.order == std::vector{0, 1, 5, 2, 3, 4});

  const auto d = recognize_shape(d_graph(3, HJString({4, 2})));
  REQUIRE(std::holds_alternative<TypeD>(d));
  CHECK(std::get<TypeD>(d).b == 3);
  CHECK(std::get<TypeD>(d).arm == HJString({4, 2}));
  CHECK(std::get<TypeD>(d).order == std::vector{0, 1, 2, 3, 4});

  // D_4: all three branches are weight-2 leaves
  CHECK(std::holds_alternative<TypeD>(recognize_shape(star(2, 3))));
  CHECK(std::holds_alternative<OtherShape>(recognize_shape(star(3, 4))));
  // three long arms, no weight-2 leaf
  const auto three_arms = build_graph({{0, 2}, {1, 3}, {2, 3}, {3, 3}}, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(std::holds_alternative<OtherShape>(recognize_shape(three_arms)));
}

TEST_CASE("lemD_closed_form examples") {
  const auto b3 = lemD_closed_form(3, HJString({2}));
  CHECK(b3.a0 == q(2, 3));
  CHECK(b3.a1 == q(1, 3));
  CHECK(b3.tip == q(1, 3));
  for (int l = 1; l <= 6; ++l) {
    std::vector<int> w(static_cast<std::size_t>(l - 1), 2);
    w.push_back(3);
    const auto v = lemD_closed_form(2, HJString(w));
    CHECK(v.a0 == q(1, 2));
    CHECK(v.a1 == q(1, 2));
    const auto c = lemD_closed_form(2, HJString(std::vector<int>(static_cast<std::size_t>(l), 2)));
    CHECK(c.a0.is_zero());
    CHECK(c.a1.is_zero());
  }
}

TEST_CASE("lemD closed form matches matrix solves") {
  for (int b = 2; b <= 8; ++b)
    for (const auto& w : std::vector<std::vector<int>>{{2}, {5}, {3, 2}, {2, 4, 2}, {5, 5, 2, 3}, {2, 2, 2, 2, 5}}) {
      const HJString arm(w);
      const int l = static_cast<int>(w.size());
      const auto d = discrepancies(d_graph(b, arm));
      const auto c = lemD_closed_form(b, arm);
      REQUIRE(c.a0 == d.at(0));
      REQUIRE(c.a1 == d.at(1));
      REQUIRE(c.al == d.at(l));
      REQUIRE(c.tip == d.at(l + 1));
      REQUIRE(c.tip == d.at(l + 2));
    }
}

TEST_CASE("chain discrepancies follow the u/v formula") {
  for (const auto& w : std::vector<std::vector<int>>{{2, 5, 3}, {7}, {3, 3, 3, 3}, {2, 2, 9, 2, 4}}) {
    const HJString s(w);
    const auto d = discrepancies(chain_graph(s));
    const auto uv = uv_sequences(s);
    for (std::size_t i = 1; i <= s.length(); ++i)
      REQUIRE(d.values[i - 1] == Rational(1) - Rational(uv.u[i] + uv.v[i], uv.q));
  }
}
