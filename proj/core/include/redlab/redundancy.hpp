#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "redlab/dual_graph.hpp"
#include "redlab/rational.hpp"

namespace redlab {

struct Curve {
  int id = 0;
  Rational coefficient;  // coefficient in the negative part N
  int self_intersection = -2;
  friend bool operator==(const Curve&, const Curve&) = default;
};

/// A point where two curves of the configuration meet transversally.
struct IntersectionPoint {
  int first = 0;  // first < second
  int second = 0;
  IntersectionPoint() = default;
  IntersectionPoint(int a, int b) : first(std::min(a, b)), second(std::max(a, b)) {}
  bool on(int curve) const noexcept { return first == curve || second == curve; }
  friend auto operator<=>(const IntersectionPoint&, const IntersectionPoint&) = default;
};

/// Stands for the (infinitely many) points of a curve that lie on no other
/// curve of the configuration.
struct GenericPoint {
  int curve = 0;
  friend auto operator<=>(const GenericPoint&, const GenericPoint&) = default;
};

using PointLocation = std::variant<IntersectionPoint, GenericPoint>;

std::string to_string(const PointLocation& p);

struct RedundantPoint {
  PointLocation location;
  Rational mult;  // sum of coefficients of the curves through the point
  friend bool operator==(const RedundantPoint&, const RedundantPoint&) = default;
};

/// Snc arrangement of curves carrying the negative part N of -K. Immutable;
/// blow_up returns a new configuration.
class CurveConfig {
 public:
  const std::vector<Curve>& curves() const noexcept { return curves_; }
  const std::set<IntersectionPoint>& incidences() const noexcept { return incidences_; }
  const DualGraph& origin() const noexcept { return *origin_; }
  /// Id of the exceptional curve of the most recent blow-up, if any.
  std::optional<int> newest() const noexcept { return newest_; }
  std::size_t blow_ups() const noexcept { return blow_ups_; }

  const Curve& curve(int id) const;  // throws Error(UnknownPoint)
  Rational mult_at(const PointLocation& p) const;  // throws Error(UnknownPoint)

 private:
  friend CurveConfig negative_part(const DualGraph& g);
  friend CurveConfig blow_up(const CurveConfig& c, const RedundantPoint& p);

  std::vector<Curve> curves_;
  std::set<IntersectionPoint> incidences_;
  std::shared_ptr<const DualGraph> origin_;
  std::optional<int> newest_;
  std::size_t blow_ups_ = 0;
  int next_id_ = 0;
};

/// Curves = vertices with coefficient a_i and self-intersection -n_i.
CurveConfig negative_part(const DualGraph& g);

/// Intersection points with mult >= 1 (in incidence order), then one
/// GenericPoint per curve with coefficient >= 1 (in curve order).
std::vector<RedundantPoint> redundant_points(const CurveConfig& c);

/// Blow-up at p. The new curve E gets coefficient mult_p - 1 and
/// self-intersection -1; curves through p drop their self-intersection by 1
/// and meet E; if p was an intersection point those two curves are separated.
/// The multiplicity is recomputed from `c`; throws Error(NotRedundant) when it
/// is below 1.
CurveConfig blow_up(const CurveConfig& c, const RedundantPoint& p);
CurveConfig blow_up(const CurveConfig& c, const PointLocation& p);

/// M(p) = max(M_j, M_k), where M_j is the least natural number with
/// mult_p - M_j (1 - a_j) < 1. Throws Error(UnboundedAtPoint) when a curve
/// through p has coefficient >= 1, Error(NotRedundant) if mult_p < 1.
long m_of_p(const CurveConfig& c, const IntersectionPoint& p);

struct SequenceStep {
  std::size_t depth = 0;  // 1 for blow-ups of the starting configuration
  PointLocation centre;
  Rational mult;
  int exceptional = 0;  // id of the new curve
};

struct SequenceReport {
  /// Empty means Unbounded.
  std::optional<long> max_length;
  /// M(p) for every initial redundant intersection point with both
  /// coefficients < 1.
  std::vector<std::pair<IntersectionPoint, long>> m_values;
  /// Number of ordered sequences (nodes of the search tree below the root).
  std::size_t sequence_count = 0;
  /// Deepest level explored; when unbounded, every configuration down to this
  /// depth was checked to contain a redundant point.
  std::size_t explored_depth = 0;
  bool redundant_at_every_level = false;
  /// True if some chain was cut off by depth_bound.
  bool truncated = false;
  /// Depth-first listing of the explored tree (capped at `tree_limit`).
  std::vector<SequenceStep> tree;
};

/// Exhaustive search over chains of redundant blow-ups: the first centre is
/// any redundant point, each later centre is a redundant point on the curve
/// created by the previous blow-up. GenericPoint markers expand once per
/// curve per level. Reports Unbounded when the origin is not log terminal.
SequenceReport enumerate_sequences(const CurveConfig& c, std::size_t depth_bound, std::size_t tree_limit = 0);

}  // namespace redlab
