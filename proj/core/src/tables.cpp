#include "redlab/tables.hpp"

#include "redlab/classification.hpp"
#include "redlab/dual_graph.hpp"
#include "redlab/redundancy.hpp"

namespace redlab {

std::string BracketRow::label(long b) const {
  return "<" + std::to_string(b) + ";" + std::to_string(q) + "," + std::to_string(q1) + ";" + std::to_string(qp) +
         "," + std::to_string(q1p) + ">";
}

const std::vector<BracketRow>& table3_rows() {
  static const std::vector<BracketRow> rows = {
      {3, 1, 3, 1, {{6, -8, 6, -7}, {3, -4, 6, -7}, {4, -5, 6, -7}, {4, -5, 6, -7}}},
      {3, 1, 3, 2, {{6, -10, 6, -9}, {3, -5, 6, -9}, {12, -19, 18, -27}, {12, -20, 18, -27}, {6, -10, 18, -27}}},
      {3, 2, 3, 2,
       {{6, -12, 6, -11}, {3, -6, 6, -11}, {4, -8, 6, -11}, {2, -4, 6, -11}, {4, -8, 6, -11}, {2, -4, 6, -11}}},
      {3, 2, 4, 3,
       {{12, -24, 12, -23}, {6, -12, 12, -23}, {8, -16, 12, -23}, {4, -8, 12, -23}, {9, -18, 12, -23},
        {6, -12, 12, -23}, {3, -6, 12, -23}}},
      {3, 1, 4, 3,
       {{12, -20, 12, -19}, {6, -10, 12, -19}, {8, -13, 12, -19}, {9, -15, 12, -19}, {6, -10, 12, -19},
        {3, -5, 12, -19}}},
      {3, 2, 4, 1,
       {{12, -18, 12, -17}, {6, -9, 12, -17}, {8, -12, 12, -17}, {4, -6, 12, -17}, {9, -13, 12, -17}}},
      {3, 1, 4, 1, {{12, -14, 12, -13}, {6, -7, 12, -13}, {8, -9, 12, -13}, {9, -10, 12, -13}}},
      {3, 2, 5, 4,
       {{30, -60, 30, -59}, {15, -30, 30, -59}, {20, -40, 30, -59}, {10, -20, 30, -59}, {24, -48, 30, -59},
        {18, -36, 30, -59}, {12, -24, 30, -59}, {6, -12, 30, -59}}},
      {3, 2, 5, 3,
       {{30, -54, 30, -53}, {15, -27, 30, -53}, {20, -36, 30, -53}, {10, -18, 30, -53}, {24, -43, 30, -53},
        {18, -32, 30, -53}}},
      {3, 1, 5, 4,
       {{30, -50, 30, -49}, {15, -25, 30, -49}, {20, -33, 30, -49}, {24, -40, 30, -49}, {18, -30, 30, -49},
        {12, -20, 30, -49}, {6, -10, 30, -49}}},
      {3, 2, 5, 2,
       {{30, -48, 30, -47}, {15, -24, 30, -47}, {20, -32, 30, -47}, {10, -16, 30, -47}, {24, -38, 30, -47},
        {12, -19, 30, -47}}},
      {3, 1, 5, 3,
       {{30, -44, 30, -43}, {15, -22, 30, -43}, {20, -29, 30, -43}, {24, -35, 30, -43}, {18, -26, 30, -43}}},
      {3, 2, 5, 1,
       {{30, -42, 30, -41}, {15, -21, 30, -41}, {20, -28, 30, -41}, {10, -14, 30, -41}, {24, -33, 30, -41}}},
      {3, 1, 5, 2,
       {{30, -38, 30, -37}, {15, -19, 30, -37}, {20, -25, 30, -37}, {24, -30, 30, -37}, {12, -15, 30, -37}}},
      {3, 1, 5, 1, {{30, -32, 30, -31}, {15, -16, 30, -31}, {20, -21, 30, -31}, {24, -25, 30, -31}}},
  };
  return rows;
}

namespace {

std::vector<Rational> fractions(std::initializer_list<std::pair<long, long>> v) {
  std::vector<Rational> out;
  for (auto [p, q] : v) out.emplace_back(Integer(p), Integer(q));
  return out;
}

}  // namespace

std::vector<ChainRow> table1_rows() {
  std::vector<ChainRow> rows = {
      {HJString({2, 2, 3, 2}), fractions({{2, 11}, {4, 11}, {6, 11}, {3, 11}})},
      {HJString({2, 3, 2}), fractions({{1, 4}, {1, 2}, {1, 4}})},
      {HJString({2, 4}), fractions({{2, 7}, {4, 7}})},
  };
  for (int n = 2; n <= 12; ++n) rows.push_back({HJString({n}), fractions({{n - 2, n}})});
  return rows;
}

std::vector<ChainRow> table2_rows() {
  return {
      {HJString({2, 2, 3, 3}), fractions({{2, 9}, {4, 9}, {6, 9}, {5, 9}})},
      {HJString({2, 3, 3, 2}), fractions({{1, 3}, {2, 3}, {2, 3}, {1, 3}})},
      {HJString({2, 3, 3}), fractions({{4, 13}, {8, 13}, {7, 13}})},
      {HJString({3, 3}), fractions({{1, 2}, {1, 2}})},
      {HJString({2, 5}), fractions({{1, 3}, {2, 3}})},
  };
}

TablesReport verify_tables(const TableBounds& bounds) {
  TablesReport r;

  auto check_chains = [&r](const std::vector<ChainRow>& rows, bool expect_points, bool& flag, const char* name) {
    for (const auto& row : rows) {
      const auto g = chain_graph(row.string);
      const auto d = discrepancies(g);
      if (d.values != row.discrepancies) {
        flag = false;
        r.mismatches.push_back(std::string(name) + " " + row.string.to_string() + ": discrepancies differ");
      }
      if (redundant_points(negative_part(g)).empty() == expect_points) {
        flag = false;
        r.mismatches.push_back(std::string(name) + " " + row.string.to_string() + ": redundant point expectation");
      }
    }
  };
  check_chains(table1_rows(), false, r.table1, "Table 1");
  check_chains(table2_rows(), true, r.table2, "Table 2");

  for (const auto& row : table3_rows()) {
    const auto arm1 = hj_expand(row.q, row.q1), arm2 = hj_expand(row.qp, row.q1p);
    for (int b = bounds.bracket_min_b; b <= bounds.bracket_max_b; ++b) {
      ++r.bracket_checks;
      const auto g = bracket_graph(b, arm1, arm2);
      const auto shape = recognize_shape(g);
      const auto* t = std::get_if<TypeBracket>(&shape);
      if (!t) {
        r.table3 = false;
        r.mismatches.push_back(row.label(b) + ": not recognised as a bracket graph");
        continue;
      }
      const auto d = discrepancies(g);
      const auto solved = d.in_order(t->order);
      std::vector<Rational> expected;
      for (const auto& e : row.entries) expected.push_back(e.at(b));
      if (solved != expected) {
        r.table3 = false;
        r.mismatches.push_back(row.label(b) + ": closed form differs from matrix solve");
      }
      if (classify(d) != SingularityClass::Canonical && solved[0] + solved[1] < Rational(1)) {
        r.table3 = false;
        r.mismatches.push_back(row.label(b) + ": a0 + a1 < 1");
      }
    }
  }

  for (int b = 2; b <= bounds.lemD_max_b; ++b) {
    for (const auto& arm : all_strings(bounds.lemD_max_arm_len, bounds.lemD_max_arm_weight)) {
      ++r.lemD_checks;
      const auto g = d_graph(b, arm);
      const auto d = discrepancies(g);
      const std::size_t l = arm.length();
      const auto closed = lemD_closed_form(b, arm);
      const auto id = [](std::size_t i) { return static_cast<int>(i); };
      if (closed.a0 != d.at(0) || closed.a1 != d.at(1) || closed.al != d.at(id(l)) || closed.tip != d.at(id(l + 1)) ||
          closed.tip != d.at(id(l + 2))) {
        r.lemD = false;
        r.mismatches.push_back("D b=" + std::to_string(b) + " arm=" + arm.to_string() + ": closed form differs");
      }
    }
  }
  return r;
}

}  // namespace redlab
