#pragma once

#include <filesystem>
#include <vector>

#include "json.hpp"
#include "redlab/dual_graph.hpp"
#include "redlab/zariski.hpp"

namespace redlab::cli {

using Json = nlohmann::json;

// Graph files: {"vertices":[{"id":int,"weight":int}],"edges":[[id,id]]}
DualGraph graph_from_json(const Json& j);
Json graph_to_json(const DualGraph& g);

// Lattice files: {"rank":int,"form":[[int]],"basis":[name],
//   "divisor":["p/q"],"curves":[{"name":str,"class":["p/q"]}]}
struct LatticeFile {
  PicardLattice lattice;
  DivisorClass divisor;
  std::vector<NamedClass> curves;
};

LatticeFile lattice_from_json(const Json& j);
Json lattice_to_json(const LatticeFile& f);

/// Accepts "p", "p/q" or a JSON integer.
Rational rational_from_json(const Json& j);
Json to_json(const Rational& r);
Json to_json(const Vector& v);

/// Reads and parses a JSON document; Error(InvalidInput) on I/O or syntax
/// failure.
Json read_json(const std::filesystem::path& path);

}  // namespace redlab::cli
