#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "redlab/hjcf.hpp"
#include "redlab/matrix.hpp"
#include "redlab/rational.hpp"

namespace redlab {

struct Vertex {
  int id = 0;
  int weight = 2;  // n_i, the negated self-intersection
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

using Edge = std::pair<int, int>;

/// Weighted dual graph of the exceptional set of a minimal resolution.
/// Only constructible through build_graph, so every instance is simple,
/// connected, has weights >= 2 and a negative definite intersection matrix.
class DualGraph {
 public:
  const std::vector<Vertex>& vertices() const noexcept { return vertices_; }
  /// Normalised (smaller id first), in input order.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::size_t size() const noexcept { return vertices_.size(); }
  std::size_t index_of(int id) const;  // throws Error(InvalidInput) if absent
  int weight_of(int id) const { return vertices_[index_of(id)].weight; }
  bool adjacent(int a, int b) const;
  std::vector<int> neighbours(int id) const;

 private:
  friend DualGraph build_graph(std::vector<Vertex>, std::vector<Edge>);
  DualGraph(std::vector<Vertex> v, std::vector<Edge> e) : vertices_(std::move(v)), edges_(std::move(e)) {}

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
};

/// Validates and builds. Errors, in the order checked: InvalidInput (empty,
/// duplicate ids, unknown endpoint), WeightTooSmall, Multigraph (self-loop
/// or repeated edge), NotConnected, NotNegativeDefinite.
DualGraph build_graph(std::vector<Vertex> vertices, std::vector<Edge> edges);

/// Chain [n_1, ..., n_l] with ids 1..l.
DualGraph chain_graph(const HJString& s);

/// Diagonal -n_i, 1 on edges, vertex order = graph order.
Matrix intersection_matrix(const DualGraph& g);

struct DiscrepancyVector {
  std::vector<int> ids;
  std::vector<Rational> values;

  const Rational& at(int id) const;
  /// Values reordered to follow `order` (a permutation of ids).
  std::vector<Rational> in_order(const std::vector<int>& order) const;
};

/// Solves M a = -(n_1 - 2, ..., n_l - 2). Throws Error(NegativeDiscrepancy)
/// if some a_i < 0.
DiscrepancyVector discrepancies(const DualGraph& g);

enum class SingularityClass { Canonical, LogTerminal, NonLogTerminal };

std::string to_string(SingularityClass c);

SingularityClass classify(const DiscrepancyVector& d);

// Shapes. `order` lists vertex ids in the conventional labelling:
//   TypeA:       E_1 .. E_l along the chain
//   TypeD:       E_0 (centre), E_1 .. E_l (arm), E_{l+1}, E_{l+2} (leaves)
//   TypeBracket: E_0 (centre), E_1 (weight-2 leaf), first arm, second arm
// Arms are read from the centre outward.
struct TypeA {
  HJString string;
  std::vector<int> order;
};

struct TypeD {
  int b = 2;
  HJString arm;
  std::vector<int> order;
};

struct TypeBracket {
  int b = 2;
  HJString arm1;
  HJString arm2;
  std::vector<int> order;
};

struct OtherShape {};

using GraphShape = std::variant<TypeA, TypeD, TypeBracket, OtherShape>;

std::string describe(const GraphShape& shape);

/// Paths are TypeA, oriented from the end vertex listed first in the graph.
/// A tree with one trivalent vertex is TypeD if two of its branches are
/// single weight-2 leaves, TypeBracket if exactly one is (arms ordered by
/// (q, q1) ascending), Other otherwise.
GraphShape recognize_shape(const DualGraph& g);

/// Graph of the given D shape (ids follow the labelling above, E_0 = 0).
DualGraph d_graph(int b, const HJString& arm);
/// Graph <b; arm1; arm2> with ids E_0 = 0, E_1 = 1, arms 2.. in order.
DualGraph bracket_graph(int b, const HJString& arm1, const HJString& arm2);

struct LemDValues {
  Rational a0;
  Rational a1;
  Rational al;
  Rational tip;  // a_{l+1} = a_{l+2}
};

/// Closed-form discrepancies of the D-type graph with centre weight b:
///   a_0 = 1 - 1/((b-1)q - q1), a_tip = a_0 / 2,
///   a_1 = 1 - (b-1)/((b-1)q - q1),
///   a_l = 1 - ((b-1) q_l - q_{1,l}) / ((b-1)q - q1)   (l >= 2; a_l = a_1 when l = 1)
/// where q_l, q_{1,l} are minors of the arm with n_l resp. n_1, n_l deleted.
LemDValues lemD_closed_form(int b, const HJString& arm);

}  // namespace redlab
