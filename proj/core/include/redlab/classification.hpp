#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "redlab/dual_graph.hpp"
#include "redlab/hjcf.hpp"

namespace redlab {

/// True iff the graph is canonical, or a chain whose weights (up to reversal)
/// are one of [2^a] (a >= 1), [2^a,3] (a >= 1), [2,2,3,2], [2,3,2], [2,4],
/// [n] (n >= 3). These are exactly the minimal resolutions without redundant
/// points.
bool reddisc_member(const DualGraph& g);

/// Whether q >= u_k + u_{k+1} + v_k + v_{k+1}, i.e. a_k + a_{k+1} >= 1.
/// Requires 1 <= k <= l-1, else Error(IndexOutOfRange).
bool tfae_check(const HJData& data, std::size_t k);
bool tfae_check(const HJString& s, std::size_t k);

struct SweepBounds {
  int a_max_len = 4;
  int a_max_weight = 5;
  int d_max_b = 8;
  int d_max_arm_len = 5;
  int d_max_arm_weight = 5;
  int bracket_max_b = 10;
};

struct Counterexample {
  std::string graph;   // human-readable description
  std::string reason;
};

struct ClassificationReport {
  std::size_t a_strings = 0;        // chains checked
  std::size_t a_without_points = 0;  // chains with no redundant point
  std::size_t d_graphs = 0;
  std::size_t bracket_graphs = 0;
  std::size_t canonical_graphs = 0;  // among D and bracket sweeps
  std::vector<Counterexample> counterexamples;

  bool ok() const noexcept { return counterexamples.empty(); }
  friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

bool operator==(const Counterexample& a, const Counterexample& b);

/// Exhaustive check of the classification.
///  * every chain with l <= a_max_len, 2 <= n_i <= a_max_weight:
///      (no redundant point) <=> reddisc_member
///  * every D graph with 2 <= b <= d_max_b and arm within the d bounds, and
///    every tabulated bracket graph with 2 <= b <= bracket_max_b:
///      redundant point exists unless canonical, and membership agrees.
/// The chain sweep is split into `jobs` contiguous ranges; the merged report
/// does not depend on `jobs`.
ClassificationReport verify_classification(const SweepBounds& bounds, unsigned jobs = 1);

/// Every HJ string with length in [1, max_len] and weights in [2, max_weight],
/// ordered by length then lexicographically.
std::vector<HJString> all_strings(int max_len, int max_weight);

}  // namespace redlab
