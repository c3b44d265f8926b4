#include "redlab_cli/json_io.hpp"

#include <fstream>
#include <set>

#include "redlab/error.hpp"

namespace redlab::cli {

namespace {

[[noreturn]] void invalid(const std::string& what) { throw Error(ErrorCode::InvalidInput, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) invalid(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

int as_int(const Json& j, const std::string& ctx) {
  if (!j.is_number_integer()) invalid(ctx + ": expected an integer");
  const auto v = j.get<long long>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max()) invalid(ctx + ": out of range");
  return static_cast<int>(v);
}

Vector vector_from_json(const Json& j, std::size_t rank, const std::string& ctx) {
  if (!j.is_array() || j.size() != rank) invalid(ctx + ": expected " + std::to_string(rank) + " entries");
  Vector v;
  v.reserve(rank);
  for (const auto& e : j) v.push_back(rational_from_json(e));
  return v;
}

}  // namespace

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(static_cast<long>(j.get<long long>()));
  if (!j.is_string()) invalid("expected a rational string \"p/q\"");
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const Error& e) {
    invalid(e.what());
  }
}

Json to_json(const Rational& r) { return r.to_string(); }

Json to_json(const Vector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

DualGraph graph_from_json(const Json& j) {
  const auto& vs = field(j, "vertices");
  const auto& es = field(j, "edges");
  if (!vs.is_array() || !es.is_array()) invalid("\"vertices\" and \"edges\" must be arrays");
  std::vector<Vertex> vertices;
  for (const auto& v : vs) vertices.push_back({as_int(field(v, "id"), "vertex id"), as_int(field(v, "weight"), "weight")});
  std::vector<Edge> edges;
  for (const auto& e : es) {
    if (!e.is_array() || e.size() != 2) invalid("each edge must be a pair of ids");
    edges.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
  }
  return build_graph(std::move(vertices), std::move(edges));
}

Json graph_to_json(const DualGraph& g) {
  Json vs = Json::array(), es = Json::array();
  for (const auto& v : g.vertices()) vs.push_back({{"id", v.id}, {"weight", v.weight}});
  for (const auto& [a, b] : g.edges()) es.push_back({a, b});
  return {{"vertices", vs}, {"edges", es}};
}

LatticeFile lattice_from_json(const Json& j) {
  const int rank_i = as_int(field(j, "rank"), "rank");
  if (rank_i < 1) invalid("rank must be positive");
  const auto rank = static_cast<std::size_t>(rank_i);

  const auto& form_j = field(j, "form");
  if (!form_j.is_array() || form_j.size() != rank) invalid("form must have rank rows");
  Matrix form(rank);
  for (std::size_t r = 0; r < rank; ++r) {
    if (!form_j[r].is_array() || form_j[r].size() != rank) invalid("form must be square of size rank");
    for (std::size_t c = 0; c < rank; ++c) form(r, c) = Rational(as_int(form_j[r][c], "form entry"));
  }

  const auto& basis_j = field(j, "basis");
  if (!basis_j.is_array()) invalid("basis must be an array of names");
  std::vector<std::string> names;
  for (const auto& n : basis_j) {
    if (!n.is_string()) invalid("basis names must be strings");
    names.push_back(n.get<std::string>());
  }

  LatticeFile f{PicardLattice(std::move(form), std::move(names)),
                DivisorClass{vector_from_json(field(j, "divisor"), rank, "divisor")}, {}};
  const auto& curves_j = field(j, "curves");
  if (!curves_j.is_array()) invalid("curves must be an array");
  std::set<std::string> seen;
  for (const auto& c : curves_j) {
    const auto& name = field(c, "name");
    if (!name.is_string()) invalid("curve name must be a string");
    if (!seen.insert(name.get<std::string>()).second) invalid("duplicate curve name " + name.get<std::string>());
    f.curves.push_back({name.get<std::string>(), DivisorClass{vector_from_json(field(c, "class"), rank, "curve class")}});
  }
  return f;
}

Json lattice_to_json(const LatticeFile& f) {
  const auto rank = f.lattice.rank();
  Json form = Json::array();
  for (std::size_t r = 0; r < rank; ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < rank; ++c) row.push_back(f.lattice.form()(r, c).numerator().get_si());
    form.push_back(row);
  }
  Json curves = Json::array();
  for (const auto& c : f.curves) curves.push_back({{"name", c.name}, {"class", to_json(c.cls.coords)}});
  return {{"rank", rank},
          {"form", form},
          {"basis", f.lattice.basis_names()},
          {"divisor", to_json(f.divisor.coords)},
          {"curves", curves}};
}

Json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) invalid("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    invalid(path.string() + ": " + e.what());
  }
}

}  // namespace redlab::cli
