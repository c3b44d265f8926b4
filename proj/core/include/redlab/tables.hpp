#pragma once

#include <string>
#include <vector>

#include "redlab/hjcf.hpp"
#include "redlab/rational.hpp"

namespace redlab {

/// (num_b * b + num_c) / (den_b * b + den_c)
struct LinearFraction {
  long num_b, num_c, den_b, den_c;
  Rational at(long b) const { return Rational(Integer(num_b * b + num_c), Integer(den_b * b + den_c)); }
};

/// One row <b; q,q1; q',q1'> of the tabulated T/O/I discrepancies,
/// entries (a_0, a_1, ..., a_l) as functions of the centre weight b.
struct BracketRow {
  int q, q1, qp, q1p;
  std::vector<LinearFraction> entries;

  std::string label(long b) const;
};

const std::vector<BracketRow>& table3_rows();

struct ChainRow {
  HJString string;
  std::vector<Rational> discrepancies;
};

/// [2,2,3,2], [2,3,2], [2,4] and [n] for 2 <= n <= 12: chains without
/// redundant points.
std::vector<ChainRow> table1_rows();
/// [2,2,3,3], [2,3,3,2], [2,3,3], [3,3], [2,5]: minimal chains with one.
std::vector<ChainRow> table2_rows();

struct TablesReport {
  bool table1 = true;
  bool table2 = true;
  std::size_t bracket_checks = 0;  // rows x values of b
  bool table3 = true;
  std::size_t lemD_checks = 0;
  bool lemD = true;
  std::vector<std::string> mismatches;

  bool ok() const noexcept { return table1 && table2 && table3 && lemD; }
};

struct TableBounds {
  int bracket_min_b = 2;
  int bracket_max_b = 10;
  int lemD_max_b = 8;
  int lemD_max_arm_len = 5;
  int lemD_max_arm_weight = 5;
};

/// Recomputes every tabulated value by exact matrix solves and compares.
/// Table 3 rows additionally need a_0 + a_1 >= 1 unless canonical.
TablesReport verify_tables(const TableBounds& bounds = {});

}  // namespace redlab
