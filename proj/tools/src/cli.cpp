#include "redlab_cli/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "redlab/classification.hpp"
#include "redlab/error.hpp"
#include "redlab/hjcf.hpp"
#include "redlab/redundancy.hpp"
#include "redlab/tables.hpp"
#include "redlab/zariski.hpp"
#include "redlab_cli/json_io.hpp"

namespace redlab::cli {

namespace {

struct Options {
  std::string format = "text";
  bool decimal = false;
  bool json() const { return format == "json"; }
};

std::string approx(const Rational& r) {
  std::ostringstream s;
  s << std::setprecision(6) << std::fixed << r.to_double();
  return s.str();
}

template <class Range, class Fn>
std::string joined(const Range& xs, Fn fn, const char* sep = " ") {
  std::string out;
  for (const auto& x : xs) {
    if (!out.empty()) out += sep;
    out += fn(x);
  }
  return out;
}

std::string fraction(const Rational& r) { return r.to_string(); }

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

Integer parse_integer(const std::string& s) {
  Integer z;
  if (s.empty() || z.set_str(s, 10) != 0) throw Error(ErrorCode::InvalidInput, "not an integer: " + s);
  return z;
}

std::string curve_name(int id) { return "E" + std::to_string(id); }

std::string location_name(const PointLocation& p) { return to_string(p); }

Json shape_json(const GraphShape& shape) {
  return std::visit(
      [](const auto& s) -> Json {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, TypeA>)
          return {{"type", "A"}, {"string", s.string.weights()}, {"order", s.order}};
        else if constexpr (std::is_same_v<T, TypeD>)
          return {{"type", "D"}, {"b", s.b}, {"arm", s.arm.weights()}, {"order", s.order}};
        else if constexpr (std::is_same_v<T, TypeBracket>)
          return {{"type", "bracket"}, {"b", s.b}, {"arm1", s.arm1.weights()}, {"arm2", s.arm2.weights()},
                  {"order", s.order}};
        else
          return {{"type", "other"}};
      },
      shape);
}

std::vector<int> shape_order(const GraphShape& shape) {
  return std::visit(
      [](const auto& s) -> std::vector<int> {
        if constexpr (requires { s.order; })
          return s.order;
        else
          return {};
      },
      shape);
}

// ---- graph commands ----

int cmd_discrep(const Options& o, const std::string& path, std::ostream& out) {
  const auto g = graph_from_json(read_json(path));
  const auto d = discrepancies(g);
  if (o.json()) {
    Json j = {{"ids", d.ids}, {"discrepancies", to_json(d.values)}};
    if (o.decimal) j["approximate"] = joined(d.values, approx);
    emit(out, j);
    return Ok;
  }
  out << "a = " << joined(d.values, fraction) << '\n';
  if (o.decimal) out << "a ~ " << joined(d.values, approx) << "  (approximate)\n";
  return Ok;
}

int cmd_classify(const Options& o, const std::string& path, std::ostream& out) {
  const auto g = graph_from_json(read_json(path));
  const auto cls = classify(discrepancies(g));
  const auto shape = recognize_shape(g);
  if (o.json()) {
    emit(out, {{"class", to_string(cls)}, {"shape", shape_json(shape)}, {"description", describe(shape)}});
    return Ok;
  }
  out << "class: " << to_string(cls) << '\n' << "shape: " << describe(shape) << '\n';
  if (const auto order = shape_order(shape); !order.empty())
    out << "order: " << joined(order, [](int id) { return std::to_string(id); }) << '\n';
  return Ok;
}

int cmd_redundant(const Options& o, const std::string& path, std::ostream& out) {
  const auto g = graph_from_json(read_json(path));
  const auto pts = redundant_points(negative_part(g));
  if (o.json()) {
    Json arr = Json::array();
    for (const auto& p : pts) arr.push_back({{"point", location_name(p.location)}, {"mult", to_json(p.mult)}});
    emit(out, {{"redundant_points", arr}});
    return Ok;
  }
  if (pts.empty()) out << "no redundant points\n";
  for (const auto& p : pts) {
    out << location_name(p.location) << "  mult " << p.mult;
    if (o.decimal) out << "  (~" << approx(p.mult) << ")";
    out << '\n';
  }
  return Ok;
}

int cmd_simulate(const Options& o, const std::string& path, std::size_t depth, std::size_t tree_limit,
                 std::ostream& out) {
  const auto g = graph_from_json(read_json(path));
  const auto r = enumerate_sequences(negative_part(g), depth, tree_limit);
  if (o.json()) {
    Json tree = Json::array();
    for (const auto& s : r.tree)
      tree.push_back({{"depth", s.depth},
                      {"centre", location_name(s.centre)},
                      {"mult", to_json(s.mult)},
                      {"exceptional", curve_name(s.exceptional)}});
    Json m = Json::array();
    for (const auto& [p, v] : r.m_values) m.push_back({{"point", location_name(PointLocation{p})}, {"M", v}});
    emit(out, {{"max_length", r.max_length ? Json(*r.max_length) : Json("unbounded")},
               {"sequence_count", r.sequence_count},
               {"explored_depth", r.explored_depth},
               {"redundant_at_every_level", r.redundant_at_every_level},
               {"truncated", r.truncated},
               {"M", m},
               {"tree", tree}});
    return Ok;
  }
  out << "sequence tree:\n";
  if (r.tree.empty()) out << "  (no redundant blow-ups)\n";
  for (const auto& s : r.tree)
    out << std::string(2 * s.depth, ' ') << "blow up " << location_name(s.centre) << " (mult " << s.mult
        << ") -> " << curve_name(s.exceptional) << '\n';
  if (r.tree.size() < r.sequence_count) out << "  ... " << r.sequence_count - r.tree.size() << " more\n";
  if (r.max_length)
    out << "max length: " << *r.max_length << '\n';
  else
    out << "max length: unbounded (redundant point at every level down to depth " << r.explored_depth << ")\n";
  out << "sequences: " << r.sequence_count << '\n';
  if (!r.m_values.empty()) {
    out << "M(p):\n";
    for (const auto& [p, v] : r.m_values) out << "  " << location_name(PointLocation{p}) << "  " << v << '\n';
  }
  return Ok;
}

// ---- continued fractions ----

int cmd_hjcf_expand(const Options& o, const std::string& q, const std::string& q1, std::ostream& out) {
  const auto s = hj_expand(parse_integer(q), parse_integer(q1));
  if (o.json())
    emit(out, {{"q", q}, {"q1", q1}, {"string", s.weights()}});
  else
    out << q << "/" << q1 << " = " << s.to_string() << '\n';
  return Ok;
}

int cmd_hjcf_eval(const Options& o, const std::vector<int>& weights, std::ostream& out) {
  const HJString s(weights);
  const auto f = hj_eval(s);
  if (o.json()) {
    emit(out, {{"string", s.weights()}, {"q", f.q.get_str()}, {"q1", f.q1.get_str()}});
    return Ok;
  }
  out << "q/q1 = " << f.q.get_str() << "/" << f.q1.get_str() << '\n';
  if (o.decimal) out << "q/q1 ~ " << approx(Rational(f.q, f.q1)) << "  (approximate)\n";
  return Ok;
}

// ---- lattices ----

int cmd_zariski(const Options& o, const std::string& path, std::ostream& out) {
  const auto f = lattice_from_json(read_json(path));
  const auto z = zariski_decompose(f.lattice, f.divisor, f.curves);
  const Rational p2 = f.lattice.intersect(z.P, z.P);
  const bool big = is_big(f.lattice, z.P);
  if (o.json()) {
    Json support = Json::array();
    for (const auto& [name, c] : z.support) support.push_back({{"name", name}, {"coefficient", to_json(c)}});
    emit(out, {{"basis", f.lattice.basis_names()},
               {"P", to_json(z.P.coords)},
               {"N", to_json(z.N.coords)},
               {"support", support},
               {"P.P", to_json(p2)},
               {"big", big}});
    return Ok;
  }
  out << "basis: " << joined(f.lattice.basis_names(), [](const std::string& s) { return s; }) << '\n';
  out << "P = " << joined(z.P.coords, fraction) << '\n';
  out << "N = " << joined(z.N.coords, fraction) << '\n';
  out << "N = "
      << (z.support.empty() ? std::string("0")
                            : joined(
                                  z.support,
                                  [](const auto& s) { return s.second.to_string() + " " + s.first; }, " + "))
      << '\n';
  if (o.decimal)
    for (const auto& [name, c] : z.support) out << "  " << name << " ~ " << approx(c) << "  (approximate)\n";
  out << "P.P = " << p2 << '\n' << "big: " << (big ? "yes" : "no") << '\n';
  return Ok;
}

int emit_fixture(const Fixture& fx, const std::string& output, std::ostream& out) {
  const auto j = lattice_to_json({fx.lattice, fx.anticanonical, fx.curves});
  if (output.empty()) {
    emit(out, j);
    return Ok;
  }
  std::ofstream file(output);
  if (!file) throw Error(ErrorCode::InvalidInput, "cannot write " + output);
  file << j.dump(2) << '\n';
  return Ok;
}

// ---- verification harnesses ----

int cmd_verify_tables(const Options& o, std::ostream& out) {
  const TableBounds bounds;
  const auto r = verify_tables(bounds);
  const std::string ok = "OK", bad = "FAILED";
  if (o.json()) {
    emit(out, {{"table1", r.table1},
               {"table2", r.table2},
               {"table3", r.table3},
               {"bracket_rows", table3_rows().size()},
               {"bracket_checks", r.bracket_checks},
               {"lemD", r.lemD},
               {"lemD_checks", r.lemD_checks},
               {"mismatches", r.mismatches}});
  } else {
    out << table3_rows().size() << " bracket rows × b=" << bounds.bracket_min_b << ".." << bounds.bracket_max_b
        << ' ' << (r.table3 ? ok : bad) << "; Table 1 " << (r.table1 ? ok : bad) << "; Table 2 "
        << (r.table2 ? ok : bad) << '\n';
    out << "D-type closed forms: " << r.lemD_checks << " graphs " << (r.lemD ? ok : bad) << '\n';
    for (const auto& m : r.mismatches) out << "mismatch: " << m << '\n';
  }
  return r.ok() ? Ok : VerificationFailure;
}

int cmd_enumerate_a(const Options& o, const SweepBounds& bounds, unsigned jobs, std::ostream& out) {
  const auto r = verify_classification(bounds, jobs);
  if (o.json()) {
    Json ce = Json::array();
    for (const auto& c : r.counterexamples) ce.push_back({{"graph", c.graph}, {"reason", c.reason}});
    emit(out, {{"max_len", bounds.a_max_len},
               {"max_weight", bounds.a_max_weight},
               {"a_strings", r.a_strings},
               {"a_without_redundant_points", r.a_without_points},
               {"d_graphs", r.d_graphs},
               {"bracket_graphs", r.bracket_graphs},
               {"canonical_graphs", r.canonical_graphs},
               {"counterexamples", ce}});
  } else {
    out << "A-strings: " << r.a_strings << " (l <= " << bounds.a_max_len << ", 2 <= n_i <= " << bounds.a_max_weight
        << "), without redundant points: " << r.a_without_points << '\n';
    out << "D graphs: " << r.d_graphs << ", bracket graphs: " << r.bracket_graphs
        << ", canonical among them: " << r.canonical_graphs << '\n';
    out << "counterexamples: " << r.counterexamples.size() << '\n';
    for (const auto& c : r.counterexamples) out << "  " << c.graph << ": " << c.reason << '\n';
  }
  return r.ok() ? Ok : VerificationFailure;
}

unsigned default_jobs() {
  if (const char* env = std::getenv("REDLAB_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Exact discrepancies, redundant points and Zariski decompositions for surface singularities",
               "redlab"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_flag("--decimal", opt.decimal, "Also print 6-digit decimal approximations");

  std::string path, output;
  auto* discrep = app.add_subcommand("discrep", "Discrepancies of a dual graph");
  discrep->add_option("graph", path, "Graph JSON file")->required();
  auto* classify_cmd = app.add_subcommand("classify", "Singularity class and shape of a dual graph");
  classify_cmd->add_option("graph", path, "Graph JSON file")->required();
  auto* redundant = app.add_subcommand("redundant", "Redundant points of the minimal resolution");
  redundant->add_option("graph", path, "Graph JSON file")->required();

  std::size_t max_depth = 10, tree_limit = 200;
  auto* simulate = app.add_subcommand("simulate", "Enumerate sequences of redundant blow-ups");
  simulate->add_option("graph", path, "Graph JSON file")->required();
  simulate->add_option("--max-depth", max_depth, "Depth bound")->check(CLI::PositiveNumber);
  simulate->add_option("--tree-limit", tree_limit, "Maximum number of tree nodes to print");

  auto* hjcf = app.add_subcommand("hjcf", "Hirzebruch-Jung continued fractions");
  hjcf->require_subcommand(1);
  std::string q, q1;
  auto* expand = hjcf->add_subcommand("expand", "Expand q/q1");
  expand->add_option("q", q)->required();
  expand->add_option("q1", q1)->required();
  std::vector<int> weights;
  auto* eval = hjcf->add_subcommand("eval", "Evaluate [n1,...,nl]");
  eval->add_option("weights", weights)->required();

  auto* zariski = app.add_subcommand("zariski", "Zariski decomposition on a Picard lattice");
  zariski->add_option("lattice", path, "Lattice JSON file")->required();

  auto* fixture = app.add_subcommand("fixture", "Emit a lattice file for a known surface");
  fixture->require_subcommand(1);
  int fm = 0, fn = 0, fk = 0;
  std::vector<int> fa;
  auto* smn = fixture->add_subcommand("smn", "P^2 blown up at m and n points on two lines");
  smn->add_option("m", fm)->required();
  smn->add_option("n", fn)->required();
  smn->add_option("-o,--output", output, "Write to a file instead of stdout");
  auto* hirz = fixture->add_subcommand("hirzebruch", "F_n blown up at a_i points on k fibres");
  hirz->add_option("n", fn)->required();
  hirz->add_option("k", fk)->required();
  hirz->add_option("a", fa)->required();
  hirz->add_option("-o,--output", output, "Write to a file instead of stdout");

  auto* verify = app.add_subcommand("verify-tables", "Check the tabulated discrepancies and D-type closed forms");

  SweepBounds bounds;
  unsigned jobs = default_jobs();
  auto* enumerate = app.add_subcommand("enumerate-a", "Exhaustive classification sweep");
  enumerate->add_option("--max-len", bounds.a_max_len, "Longest chain")->check(CLI::PositiveNumber);
  enumerate->add_option("--max-weight", bounds.a_max_weight, "Largest weight")->check(CLI::Range(2, 1000));
  enumerate->add_option("--jobs", jobs, "Worker threads (default: REDLAB_JOBS or 1)")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? Ok : InvalidInput;
  }

  try {
    if (*discrep) return cmd_discrep(opt, path, out);
    if (*classify_cmd) return cmd_classify(opt, path, out);
    if (*redundant) return cmd_redundant(opt, path, out);
    if (*simulate) return cmd_simulate(opt, path, max_depth, tree_limit, out);
    if (*expand) return cmd_hjcf_expand(opt, q, q1, out);
    if (*eval) return cmd_hjcf_eval(opt, weights, out);
    if (*zariski) return cmd_zariski(opt, path, out);
    if (*smn) return emit_fixture(fixture_smn(fm, fn), output, out);
    if (*hirz) return emit_fixture(fixture_hirzebruch(fn, fk, fa), output, out);
    if (*verify) return cmd_verify_tables(opt, out);
    if (*enumerate) return cmd_enumerate_a(opt, bounds, jobs, out);
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    return InvalidInput;
  }
  return InvalidInput;
}

}  // namespace redlab::cli
