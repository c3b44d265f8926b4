#include <algorithm>
#include <functional>

#include "doctest.h"
#include "redlab/error.hpp"
#include "redlab/redundancy.hpp"

using namespace redlab;

namespace {

Rational q(long p, long d) { return Rational(Integer(p), Integer(d)); }

CurveConfig chain(std::vector<int> w) { return negative_part(chain_graph(HJString(std::move(w)))); }

CurveConfig star_config() {
  return negative_part(build_graph({{0, 3}, {1, 2}, {2, 2}, {3, 2}, {4, 2}}, {{0, 1}, {0, 2}, {0, 3}, {0, 4}}));
}

std::vector<Rational> coefficients(const CurveConfig& c) {
  std::vector<Rational> out;
  for (const auto& cv : c.curves()) out.push_back(cv.coefficient);
  return out;
}

}  // namespace

TEST_CASE("negative_part") {
  const auto c = chain({3, 3});
  CHECK(coefficients(c) == std::vector{q(1, 2), q(1, 2)});
  CHECK(c.incidences().size() == 1);
  CHECK(c.curve(1).self_intersection == -3);
  for (const auto& a : coefficients(chain({2, 2, 2, 2}))) CHECK(a.is_zero());
  CHECK(coefficients(chain({2, 2, 3, 2})) == std::vector{q(2, 11), q(4, 11), q(6, 11), q(3, 11)});
}

TEST_CASE("redundant_points") {
  const auto pts33 = redundant_points(chain({3, 3}));
  REQUIRE(pts33.size() == 1);
  CHECK(pts33[0].location == PointLocation{IntersectionPoint(1, 2)});
  CHECK(pts33[0].mult == Rational(1));

  CHECK(redundant_points(chain({2, 4})).empty());

  const auto p2233 = redundant_points(chain({2, 2, 3, 3}));
  REQUIRE(p2233.size() == 2);
  CHECK(p2233[0].location == PointLocation{IntersectionPoint(2, 3)});
  CHECK(p2233[0].mult == q(10, 9));
  CHECK(p2233[1].location == PointLocation{IntersectionPoint(3, 4)});
  CHECK(p2233[1].mult == q(11, 9));

  const auto star = redundant_points(star_config());
  REQUIRE(star.size() == 5);
  for (int i = 0; i < 4; ++i) {
    CHECK(std::holds_alternative<IntersectionPoint>(star[static_cast<std::size_t>(i)].location));
    CHECK(star[static_cast<std::size_t>(i)].mult == q(3, 2));
  }
  CHECK(star[4].location == PointLocation{GenericPoint{0}});
  CHECK(star[4].mult == Rational(1));
}

TEST_CASE("blow_up") {
  const auto c = chain({3, 3});
  const auto b = blow_up(c, redundant_points(c)[0]);
  CHECK(coefficients(b) == std::vector{q(1, 2), q(1, 2), Rational(0)});
  std::vector<int> self;
  for (const auto& cv : b.curves()) self.push_back(cv.self_intersection);
  CHECK(self == std::vector{-4, -4, -1});
  CHECK(b.incidences() == std::set{IntersectionPoint(1, 3), IntersectionPoint(2, 3)});
  CHECK(b.newest() == 3);
  // original untouched
  CHECK(c.curves().size() == 2);

  const auto s = star_config();
  const auto g = blow_up(s, PointLocation{GenericPoint{0}});
  CHECK(g.curve(5).coefficient == Rational(0));
  CHECK(g.curve(5).self_intersection == -1);
  CHECK(g.curve(0).self_intersection == -4);
  CHECK(g.curve(0).coefficient == Rational(1));
  const auto after = redundant_points(g);
  CHECK(std::find_if(after.begin(), after.end(), [](const RedundantPoint& p) {
          return p.location == PointLocation{GenericPoint{0}};
        }) != after.end());

  const auto c24 = chain({2, 4});
  try {
    blow_up(c24, PointLocation{IntersectionPoint(1, 2)});
    FAIL("expected NotRedundant");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotRedundant);
  }
  CHECK_THROWS_AS(blow_up(c24, PointLocation{IntersectionPoint(1, 5)}), Error);
}

TEST_CASE("m_of_p") {
  CHECK(m_of_p(chain({3, 3}), IntersectionPoint(1, 2)) == 1);
  CHECK(m_of_p(chain({2, 3, 3, 2}), IntersectionPoint(2, 3)) == 2);
  CHECK(m_of_p(chain({2, 5}), IntersectionPoint(1, 2)) == 1);
  try {
    m_of_p(star_config(), IntersectionPoint(0, 1));
    FAIL("expected UnboundedAtPoint");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnboundedAtPoint);
  }
}

TEST_CASE("enumerate_sequences") {
  const auto r24 = enumerate_sequences(chain({2, 4}), 20);
  CHECK(r24.max_length == 0);
  CHECK(r24.sequence_count == 0);

  const auto r = enumerate_sequences(chain({2, 3, 3, 2}), 20, 100);
  CHECK(r.max_length == 2);
  long best = 0;
  for (const auto& [p, m] : r.m_values) best = std::max(best, m);
  CHECK(best == 2);
  CHECK_FALSE(r.truncated);
  CHECK(r.tree.size() == r.sequence_count);

  const auto star = enumerate_sequences(star_config(), 5);
  CHECK_FALSE(star.max_length.has_value());
  CHECK(star.explored_depth == 5);
  CHECK(star.redundant_at_every_level);
  CHECK(star.truncated);
}

TEST_CASE("chain search matches brute-force lengths") {
  // Lengths from an independent brute-force simulation of chains of
  // infinitely near redundant blow-ups.
  const std::vector<std::pair<std::vector<int>, long>> expected = {
      {{3, 3}, 1},    {{2, 2, 3, 3}, 1}, {{2, 3, 3, 2}, 2}, {{2, 3, 3}, 1}, {{2, 5}, 1},
      {{3, 4}, 1},    {{4, 4}, 2},       {{5, 5}, 3},       {{3, 3, 3}, 2}, {{6, 6}, 4},
      {{2, 7}, 1},    {{8, 8}, 6},       {{3, 9}, 4},       {{2, 2, 3, 2}, 0}};
  for (const auto& [w, len] : expected) {
    const auto r = enumerate_sequences(chain(w), 50);
    CAPTURE(HJString(w).to_string());
    CHECK(r.max_length == len);
    long best = 0;
    for (const auto& [p, m] : r.m_values) best = std::max(best, m);
    CHECK(best == len);
  }
}

TEST_CASE("multiplicities decrease with increasing gaps along every chain") {
  for (const auto& w : std::vector<std::vector<int>>{{3, 3}, {2, 3, 3, 2}, {5, 5}, {3, 3, 3}, {8, 8}, {3, 9}}) {
    const auto start = chain(w);
    std::function<void(const CurveConfig&, const RedundantPoint&, std::optional<Rational>)> walk =
        [&](const CurveConfig& cfg, const RedundantPoint& p, std::optional<Rational> prev_gap) {
          const auto next = blow_up(cfg, p);
          const int e = *next.newest();
          const auto& ip = std::get<IntersectionPoint>(p.location);
          // the points E_j~ ^ E on the two branches
          for (int j : {ip.first, ip.second}) {
            const Rational followed = next.mult_at(IntersectionPoint(j, e));
            const Rational a_j = cfg.curve(j).coefficient;
            REQUIRE(followed == p.mult - (Rational(1) - a_j));
            REQUIRE(followed < p.mult);
          }
          for (const auto& r : redundant_points(next)) {
            const auto* rp = std::get_if<IntersectionPoint>(&r.location);
            if (!rp || !rp->on(e)) continue;
            const Rational gap = p.mult - r.mult;
            if (prev_gap) REQUIRE(*prev_gap <= gap);
            walk(next, r, gap);
          }
        };
    for (const auto& p : redundant_points(start)) walk(start, p, std::nullopt);
  }
}
