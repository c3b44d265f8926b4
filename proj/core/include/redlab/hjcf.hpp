#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "redlab/rational.hpp"

namespace redlab {

/// Weights [n_1, ..., n_l] of a Hirzebruch-Jung continued fraction
///   q/q1 = n_1 - 1/(n_2 - 1/(... - 1/n_l)),  every n_i >= 2.
class HJString {
 public:
  HJString() = default;
  /// Throws Error(BadParameters) on an empty list or any weight < 2.
  explicit HJString(std::vector<int> weights);

  std::size_t length() const noexcept { return weights_.size(); }
  /// 1-based, matching the conventional indexing of the weights.
  int at(std::size_t i) const { return weights_.at(i - 1); }
  const std::vector<int>& weights() const noexcept { return weights_; }

  HJString reversed() const;
  /// String with n_i replaced by n_i + 1 (1-based i).
  HJString incremented(std::size_t i) const;
  std::string to_string() const;  // "[2,3,2]"

  friend auto operator<=>(const HJString&, const HJString&) = default;

 private:
  std::vector<int> weights_;
};

/// Lexicographically smaller of s and its reverse; both denote the same
/// cyclic quotient singularity.
HJString normalized(const HJString& s);

struct HJFraction {
  Integer q;
  Integer q1;
  friend bool operator==(const HJFraction&, const HJFraction&) = default;
};

/// Full minor data of a string. Index conventions run 0..l+1:
///   u_0 = 0, u_1 = 1, u_s = |[n_1..n_{s-1}]|,
///   v_{l+1} = 0, v_l = 1, v_s = |[n_{s+1}..n_l]|,
///   q = u_{l+1} = v_0,  q1 = v_1.
struct HJData {
  HJString string;
  Integer q;
  Integer q1;
  std::vector<Integer> u;  // size l+2
  std::vector<Integer> v;  // size l+2
};

HJFraction hj_eval(const HJString& s);

inline constexpr std::size_t kMaxExpansionLength = 1u << 20;

/// Inverse of hj_eval. Requires 0 < q1 < q and gcd(q, q1) = 1, otherwise
/// throws Error(BadFraction). Also BadFraction if the expansion would have
/// more than kMaxExpansionLength terms (q/(q-1) has q-1 of them).
HJString hj_expand(const Integer& q, const Integer& q1);

HJData uv_sequences(const HJString& s);

/// |det| of M(-n_1, ..., -n_l) with the rows/columns in `deleted` (1-based)
/// removed. Deleting every index gives 1. Computed from the matrix itself,
/// independently of the u/v recurrences.
Integer minor_det(const HJString& s, const std::set<std::size_t>& deleted);

}  // namespace redlab
