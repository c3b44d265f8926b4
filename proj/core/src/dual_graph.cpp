#include "redlab/dual_graph.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "redlab/error.hpp"

namespace redlab {

std::size_t DualGraph::index_of(int id) const {
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    if (vertices_[i].id == id) return i;
  throw Error(ErrorCode::InvalidInput, "no vertex with id " + std::to_string(id));
}

bool DualGraph::adjacent(int a, int b) const {
  const Edge e{std::min(a, b), std::max(a, b)};
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

std::vector<int> DualGraph::neighbours(int id) const {
  std::vector<int> out;
  for (const auto& [a, b] : edges_) {
    if (a == id) out.push_back(b);
    if (b == id) out.push_back(a);
  }
  // Keep graph (file) order so traversals are reproducible.
  std::sort(out.begin(), out.end(), [this](int x, int y) { return index_of(x) < index_of(y); });
  return out;
}

DualGraph build_graph(std::vector<Vertex> vertices, std::vector<Edge> edges) {
  if (vertices.empty()) throw Error(ErrorCode::InvalidInput, "graph has no vertices");
  std::map<int, std::size_t> index;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    if (!index.emplace(vertices[i].id, i).second)
      throw Error(ErrorCode::InvalidInput, "duplicate vertex id " + std::to_string(vertices[i].id));
  for (auto& e : edges) {
    if (!index.count(e.first) || !index.count(e.second))
      throw Error(ErrorCode::InvalidInput,
                  "edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ") names an unknown vertex");
    if (e.first > e.second) std::swap(e.first, e.second);
  }
  for (const auto& v : vertices)
    if (v.weight < 2)
      throw Error(ErrorCode::WeightTooSmall,
                  "vertex " + std::to_string(v.id) + " has weight " + std::to_string(v.weight) + " < 2");

  std::set<Edge> seen;
  for (const auto& e : edges) {
    if (e.first == e.second) throw Error(ErrorCode::Multigraph, "self-loop at vertex " + std::to_string(e.first));
    if (!seen.insert(e).second)
      throw Error(ErrorCode::Multigraph,
                  "repeated edge (" + std::to_string(e.first) + "," + std::to_string(e.second) + ")");
  }

  // union-find connectivity
  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = vertices.size();
  for (const auto& [a, b] : edges) {
    const auto ra = find(index[a]), rb = find(index[b]);
    if (ra != rb) {
      parent[ra] = rb;
      --components;
    }
  }
  if (components != 1) throw Error(ErrorCode::NotConnected, std::to_string(components) + " connected components");

  DualGraph g(std::move(vertices), std::move(edges));
  if (!is_negative_definite(intersection_matrix(g)))
    throw Error(ErrorCode::NotNegativeDefinite, "intersection matrix is not negative definite");
  return g;
}

DualGraph chain_graph(const HJString& s) {
  std::vector<Vertex> v;
  std::vector<Edge> e;
  for (std::size_t i = 1; i <= s.length(); ++i) {
    v.push_back({static_cast<int>(i), s.at(i)});
    if (i > 1) e.emplace_back(static_cast<int>(i - 1), static_cast<int>(i));
  }
  return build_graph(std::move(v), std::move(e));
}

Matrix intersection_matrix(const DualGraph& g) {
  Matrix m(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) m(i, i) = Rational(-g.vertices()[i].weight);
  for (const auto& [a, b] : g.edges()) {
    const auto i = g.index_of(a), j = g.index_of(b);
    m(i, j) = m(j, i) = Rational(1);
  }
  return m;
}

const Rational& DiscrepancyVector::at(int id) const {
  for (std::size_t i = 0; i < ids.size(); ++i)
    if (ids[i] == id) return values[i];
  throw Error(ErrorCode::InvalidInput, "no discrepancy for vertex " + std::to_string(id));
}

std::vector<Rational> DiscrepancyVector::in_order(const std::vector<int>& order) const {
  std::vector<Rational> out;
  out.reserve(order.size());
  for (int id : order) out.push_back(at(id));
  return out;
}

DiscrepancyVector discrepancies(const DualGraph& g) {
  Vector rhs;
  rhs.reserve(g.size());
  for (const auto& v : g.vertices()) rhs.emplace_back(Rational(2 - v.weight));
  DiscrepancyVector d;
  d.values = solve_linear(intersection_matrix(g), rhs);
  for (std::size_t i = 0; i < g.size(); ++i) {
    d.ids.push_back(g.vertices()[i].id);
    if (d.values[i].sign() < 0)
      throw Error(ErrorCode::NegativeDiscrepancy,
                  "vertex " + std::to_string(g.vertices()[i].id) + " has discrepancy " + d.values[i].to_string());
  }
  return d;
}

std::string to_string(SingularityClass c) {
  switch (c) {
    case SingularityClass::Canonical: return "Canonical";
    case SingularityClass::LogTerminal: return "LogTerminal";
    case SingularityClass::NonLogTerminal: return "NonLogTerminal";
  }
  return "?";
}

SingularityClass classify(const DiscrepancyVector& d) {
  const Rational one(1);
  bool all_zero = true;
  for (const auto& a : d.values) {
    if (a >= one) return SingularityClass::NonLogTerminal;
    if (!a.is_zero()) all_zero = false;
  }
  return all_zero ? SingularityClass::Canonical : SingularityClass::LogTerminal;
}

namespace {

struct Branch {
  std::vector<int> ids;
  std::vector<int> weights;
};

Branch walk_branch(const DualGraph& g, int centre, int first) {
  Branch b;
  int prev = centre, cur = first;
  for (;;) {
    b.ids.push_back(cur);
    b.weights.push_back(g.weight_of(cur));
    int next = -1;
    for (int n : g.neighbours(cur))
      if (n != prev) next = n;
    if (next < 0) break;
    prev = cur;
    cur = next;
  }
  return b;
}

bool is_two_leaf(const Branch& b) { return b.ids.size() == 1 && b.weights[0] == 2; }

}  // namespace

GraphShape recognize_shape(const DualGraph& g) {
  const std::size_t n = g.size();
  if (g.edges().size() != n - 1) return OtherShape{};

  std::vector<std::size_t> degree(n, 0);
  for (const auto& [a, b] : g.edges()) {
    ++degree[g.index_of(a)];
    ++degree[g.index_of(b)];
  }
  const auto max_degree = *std::max_element(degree.begin(), degree.end());

  if (max_degree <= 2) {
    std::size_t start = 0;
    while (degree[start] > 1) ++start;
    const int first = g.vertices()[start].id;
    TypeA shape;
    shape.order.push_back(first);
    if (n > 1) {
      const auto rest = walk_branch(g, first, g.neighbours(first).front());
      shape.order.insert(shape.order.end(), rest.ids.begin(), rest.ids.end());
    }
    std::vector<int> w;
    for (int id : shape.order) w.push_back(g.weight_of(id));
    shape.string = HJString(std::move(w));
    return shape;
  }

  if (max_degree != 3 || std::count(degree.begin(), degree.end(), 3) != 1) return OtherShape{};
  const auto centre_idx = static_cast<std::size_t>(std::find(degree.begin(), degree.end(), 3) - degree.begin());
  const int centre = g.vertices()[centre_idx].id;
  const int b = g.vertices()[centre_idx].weight;

  std::vector<Branch> branches;
  for (int nb : g.neighbours(centre)) branches.push_back(walk_branch(g, centre, nb));
  const auto leaves = std::count_if(branches.begin(), branches.end(), is_two_leaf);

  if (leaves >= 2) {
    // The arm is the first branch that is not needed as one of the two leaves.
    std::size_t arm = 0;
    if (leaves == 2)
      while (is_two_leaf(branches[arm])) ++arm;
    TypeD shape;
    shape.b = b;
    shape.arm = HJString(branches[arm].weights);
    shape.order.push_back(centre);
    shape.order.insert(shape.order.end(), branches[arm].ids.begin(), branches[arm].ids.end());
    for (std::size_t i = 0; i < 3; ++i)
      if (i != arm) shape.order.push_back(branches[i].ids[0]);
    return shape;
  }

  if (leaves == 1) {
    std::size_t leaf = 0;
    while (!is_two_leaf(branches[leaf])) ++leaf;
    std::vector<Branch> arms;
    for (std::size_t i = 0; i < 3; ++i)
      if (i != leaf) arms.push_back(branches[i]);
    auto key = [](const Branch& br) {
      const auto f = hj_eval(HJString(br.weights));
      return std::make_tuple(f.q, f.q1, br.weights);
    };
    if (key(arms[1]) < key(arms[0])) std::swap(arms[0], arms[1]);
    TypeBracket shape;
    shape.b = b;
    shape.arm1 = HJString(arms[0].weights);
    shape.arm2 = HJString(arms[1].weights);
    shape.order.push_back(centre);
    shape.order.push_back(branches[leaf].ids[0]);
    for (const auto& a : arms) shape.order.insert(shape.order.end(), a.ids.begin(), a.ids.end());
    return shape;
  }
  return OtherShape{};
}

std::string describe(const GraphShape& shape) {
  std::ostringstream os;
  auto ids = [&os](const std::vector<int>& order) {
    os << " order=(";
    for (std::size_t i = 0; i < order.size(); ++i) os << (i ? "," : "") << order[i];
    os << ")";
  };
  if (const auto* a = std::get_if<TypeA>(&shape)) {
    os << "TypeA " << a->string.to_string();
    ids(a->order);
  } else if (const auto* d = std::get_if<TypeD>(&shape)) {
    const auto f = hj_eval(d->arm);
    os << "TypeD b=" << d->b << " arm=" << d->arm.to_string() << " (q/q1=" << f.q << "/" << f.q1 << ")";
    ids(d->order);
  } else if (const auto* t = std::get_if<TypeBracket>(&shape)) {
    const auto f1 = hj_eval(t->arm1), f2 = hj_eval(t->arm2);
    os << "TypeBracket <" << t->b << ";" << f1.q << "," << f1.q1 << ";" << f2.q << "," << f2.q1 << "> arms "
       << t->arm1.to_string() << " " << t->arm2.to_string();
    ids(t->order);
  } else {
    os << "Other";
  }
  return os.str();
}

DualGraph d_graph(int b, const HJString& arm) {
  const int l = static_cast<int>(arm.length());
  std::vector<Vertex> v{{0, b}};
  std::vector<Edge> e;
  for (int i = 1; i <= l; ++i) {
    v.push_back({i, arm.at(static_cast<std::size_t>(i))});
    e.emplace_back(i - 1, i);
  }
  v.push_back({l + 1, 2});
  v.push_back({l + 2, 2});
  e.emplace_back(0, l + 1);
  e.emplace_back(0, l + 2);
  return build_graph(std::move(v), std::move(e));
}

DualGraph bracket_graph(int b, const HJString& arm1, const HJString& arm2) {
  std::vector<Vertex> v{{0, b}, {1, 2}};
  std::vector<Edge> e{{0, 1}};
  int next = 2;
  for (const HJString* arm : {&arm1, &arm2}) {
    int prev = 0;
    for (int w : arm->weights()) {
      v.push_back({next, w});
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return build_graph(std::move(v), std::move(e));
}

LemDValues lemD_closed_form(int b, const HJString& arm) {
  if (b < 2) throw Error(ErrorCode::BadParameters, "centre weight must be >= 2");
  const auto [q, q1] = hj_eval(arm);
  const std::size_t l = arm.length();
  const Rational denom(Integer((b - 1) * q - q1));
  LemDValues out;
  out.a0 = Rational(1) - Rational(1) / denom;
  out.tip = out.a0 / Rational(2);
  out.a1 = Rational(1) - Rational(b - 1) / denom;
  if (l == 1) {
    out.al = out.a1;
  } else {
    const Integer ql = minor_det(arm, {l});
    const Integer q1l = minor_det(arm, {1, l});
    out.al = Rational(1) - Rational(Integer((b - 1) * ql - q1l)) / denom;
  }
  return out;
}

}  // namespace redlab
