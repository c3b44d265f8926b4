#include "redlab/zariski.hpp"

#include <algorithm>
#include <set>

#include "redlab/error.hpp"

namespace redlab {

DivisorClass& DivisorClass::operator+=(const DivisorClass& o) {
  if (o.size() != size()) throw Error(ErrorCode::DimensionMismatch, "divisor classes of different rank");
  for (std::size_t i = 0; i < size(); ++i) coords[i] += o.coords[i];
  return *this;
}

DivisorClass& DivisorClass::operator-=(const DivisorClass& o) {
  if (o.size() != size()) throw Error(ErrorCode::DimensionMismatch, "divisor classes of different rank");
  for (std::size_t i = 0; i < size(); ++i) coords[i] -= o.coords[i];
  return *this;
}

DivisorClass operator*(const Rational& s, DivisorClass a) {
  for (auto& c : a.coords) c *= s;
  return a;
}

PicardLattice::PicardLattice(Matrix form, std::vector<std::string> basis_names)
    : form_(std::move(form)), names_(std::move(basis_names)) {
  if (form_.dim() == 0) throw Error(ErrorCode::BadParameters, "lattice rank must be positive");
  if (names_.size() != form_.dim())
    throw Error(ErrorCode::BadParameters, "basis has " + std::to_string(names_.size()) + " names for rank " +
                                              std::to_string(form_.dim()));
  if (!form_.is_symmetric()) throw Error(ErrorCode::BadParameters, "intersection form is not symmetric");
  for (std::size_t i = 0; i < rank(); ++i)
    for (std::size_t j = 0; j < rank(); ++j)
      if (!form_(i, j).is_integer()) throw Error(ErrorCode::BadParameters, "intersection form is not integral");
  std::set<std::string> unique(names_.begin(), names_.end());
  if (unique.size() != names_.size()) throw Error(ErrorCode::BadParameters, "duplicate basis name");
}

DivisorClass PicardLattice::basis(const std::string& name) const {
  const auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw Error(ErrorCode::BadParameters, "no basis element '" + name + "'");
  DivisorClass c = zero();
  c.coords[static_cast<std::size_t>(it - names_.begin())] = Rational(1);
  return c;
}

Rational PicardLattice::intersect(const DivisorClass& a, const DivisorClass& b) const {
  if (a.size() != rank() || b.size() != rank())
    throw Error(ErrorCode::DimensionMismatch, "divisor class rank differs from lattice rank");
  Rational acc;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (a.coords[i].is_zero()) continue;
    for (std::size_t j = 0; j < rank(); ++j)
      if (!b.coords[j].is_zero() && !form_(i, j).is_zero()) acc += a.coords[i] * form_(i, j) * b.coords[j];
  }
  return acc;
}

std::optional<Rational> ZariskiDecomp::coefficient(const std::string& name) const {
  for (const auto& [n, c] : support)
    if (n == name) return c;
  return std::nullopt;
}

Rational ZariskiDecomp::mult_at(const std::vector<std::string>& curves_through_point) const {
  Rational m;
  for (const auto& name : curves_through_point)
    if (auto c = coefficient(name)) m += *c;
  return m;
}

ZariskiDecomp zariski_decompose(const PicardLattice& lat, const DivisorClass& D, const std::vector<NamedClass>& curves) {
  if (D.size() != lat.rank()) throw Error(ErrorCode::DimensionMismatch, "divisor rank differs from lattice rank");
  for (const auto& c : curves)
    if (c.cls.size() != lat.rank())
      throw Error(ErrorCode::DimensionMismatch, "class of '" + c.name + "' has wrong rank");

  // Indices into `curves`, kept sorted so the result is independent of the
  // order in which negative curves are discovered.
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < curves.size(); ++i)
    if (lat.intersect(D, curves[i].cls).sign() < 0) support.push_back(i);

  ZariskiDecomp out{D, lat.zero(), {}};
  Vector coeffs;
  while (!support.empty()) {
    const std::size_t s = support.size();
    Matrix gram(s);
    Vector rhs(s);
    for (std::size_t i = 0; i < s; ++i) {
      rhs[i] = lat.intersect(D, curves[support[i]].cls);
      for (std::size_t j = 0; j < s; ++j) gram(i, j) = lat.intersect(curves[support[i]].cls, curves[support[j]].cls);
    }
    if (!is_negative_definite(gram))
      throw Error(ErrorCode::NotPseudoEffective, "support of the negative part is not negative definite");
    coeffs = solve_linear(gram, rhs);
    for (std::size_t i = 0; i < s; ++i)
      if (coeffs[i].sign() < 0)
        throw Error(ErrorCode::NotPseudoEffective,
                    "coefficient of '" + curves[support[i]].name + "' is negative (" + coeffs[i].to_string() + ")");

    out.N = lat.zero();
    for (std::size_t i = 0; i < s; ++i) out.N += coeffs[i] * curves[support[i]].cls;
    out.P = D - out.N;

    std::vector<std::size_t> grown = support;
    for (std::size_t i = 0; i < curves.size(); ++i)
      if (!std::binary_search(support.begin(), support.end(), i) && lat.intersect(out.P, curves[i].cls).sign() < 0)
        grown.push_back(i);
    if (grown.size() == support.size()) break;
    std::sort(grown.begin(), grown.end());
    support = std::move(grown);
  }

  for (std::size_t i = 0; i < support.size(); ++i)
    if (!coeffs[i].is_zero()) out.support.emplace_back(curves[support[i]].name, coeffs[i]);
  return out;
}

bool is_big(const PicardLattice& lat, const DivisorClass& P) { return lat.intersect(P, P).sign() > 0; }

DivisorClass pullback(const DivisorClass& c, std::size_t new_rank) {
  if (new_rank < c.size()) throw Error(ErrorCode::DimensionMismatch, "pullback cannot lower the rank");
  DivisorClass out = c;
  out.coords.resize(new_rank);
  return out;
}

BlowUpResult lattice_blow_up(const PicardLattice& lat, const std::vector<std::string>& curves_through_p,
                             const std::vector<NamedClass>& classes, std::string exceptional_name) {
  if (curves_through_p.size() > 2)
    throw Error(ErrorCode::BadParameters, "a point on an snc configuration lies on at most two curves");
  for (const auto& name : curves_through_p)
    if (std::none_of(classes.begin(), classes.end(), [&](const NamedClass& c) { return c.name == name; }))
      throw Error(ErrorCode::BadParameters, "no class named '" + name + "'");

  auto names = lat.basis_names();
  const std::string base = exceptional_name;
  for (int suffix = 2; std::find(names.begin(), names.end(), exceptional_name) != names.end(); ++suffix)
    exceptional_name = base + "_" + std::to_string(suffix);
  names.push_back(exceptional_name);

  const std::size_t r = lat.rank() + 1;
  Matrix form(r);
  for (std::size_t i = 0; i < lat.rank(); ++i)
    for (std::size_t j = 0; j < lat.rank(); ++j) form(i, j) = lat.form()(i, j);
  form(r - 1, r - 1) = Rational(-1);

  BlowUpResult out{PicardLattice(std::move(form), std::move(names)), {}, DivisorClass{Vector(r)}, exceptional_name};
  out.exceptional.coords[r - 1] = Rational(1);
  for (const auto& c : classes) {
    DivisorClass up = pullback(c.cls, r);
    if (std::find(curves_through_p.begin(), curves_through_p.end(), c.name) != curves_through_p.end())
      up -= out.exceptional;
    out.classes.push_back({c.name, std::move(up)});
  }
  return out;
}

}  // namespace redlab
