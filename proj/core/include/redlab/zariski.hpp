#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "redlab/matrix.hpp"
#include "redlab/rational.hpp"

namespace redlab {

/// Divisor class with rational coordinates in a lattice basis.
struct DivisorClass {
  Vector coords;

  std::size_t size() const noexcept { return coords.size(); }
  DivisorClass& operator+=(const DivisorClass& o);
  DivisorClass& operator-=(const DivisorClass& o);
  friend DivisorClass operator+(DivisorClass a, const DivisorClass& b) { return a += b; }
  friend DivisorClass operator-(DivisorClass a, const DivisorClass& b) { return a -= b; }
  friend DivisorClass operator*(const Rational& s, DivisorClass a);
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
};

/// Free lattice with a symmetric integral intersection form.
class PicardLattice {
 public:
  /// Throws Error(BadParameters) if the form is not square, symmetric and
  /// integral or the names do not match the rank.
  PicardLattice(Matrix form, std::vector<std::string> basis_names);

  std::size_t rank() const noexcept { return form_.dim(); }
  const Matrix& form() const noexcept { return form_; }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }

  /// Unit vector of the named basis element.
  DivisorClass basis(const std::string& name) const;
  DivisorClass zero() const { return DivisorClass{Vector(rank())}; }

  Rational intersect(const DivisorClass& a, const DivisorClass& b) const;

 private:
  Matrix form_;
  std::vector<std::string> names_;
};

struct NamedClass {
  std::string name;
  DivisorClass cls;
};

struct ZariskiDecomp {
  DivisorClass P;
  DivisorClass N;
  /// Curves with nonzero coefficient in N, in candidate order.
  std::vector<std::pair<std::string, Rational>> support;

  /// Sum of coefficients of the named support curves (0 for curves outside
  /// the support), i.e. the multiplicity of N at a point lying on exactly those.
  Rational mult_at(const std::vector<std::string>& curves_through_point) const;
  std::optional<Rational> coefficient(const std::string& name) const;
};

/// Iterative decomposition D = P + N against the supplied candidate curves:
/// start with the curves D meets negatively, solve N.C = D.C on the support,
/// and enlarge the support by every candidate P meets negatively until none
/// is left. Throws Error(NotPseudoEffective) if the support stops being
/// negative definite or a coefficient turns negative.
ZariskiDecomp zariski_decompose(const PicardLattice& lat, const DivisorClass& D, const std::vector<NamedClass>& curves);

/// P.P > 0, meaningful for nef P.
bool is_big(const PicardLattice& lat, const DivisorClass& P);

struct BlowUpResult {
  PicardLattice lattice;
  std::vector<NamedClass> classes;  // strict transforms / pullbacks
  DivisorClass exceptional;
  std::string exceptional_name;
};

/// Blow-up at a point lying on the named curves (none, one, or two meeting
/// transversally). Adds a basis element E with E.E = -1 orthogonal to the
/// old basis; named curves become class - E, everything else is pulled back.
BlowUpResult lattice_blow_up(const PicardLattice& lat, const std::vector<std::string>& curves_through_p,
                             const std::vector<NamedClass>& classes, std::string exceptional_name = "E");

/// Extends a class by a zero coordinate for each added basis element.
DivisorClass pullback(const DivisorClass& c, std::size_t new_rank);

struct Fixture {
  PicardLattice lattice;
  DivisorClass anticanonical;  // D = -K
  std::vector<NamedClass> curves;  // candidate negative curves
};

/// Blow-up of P^2 at m points on one line and n on another (m >= n >= 4).
/// Basis l, E1_1..E1_m, E2_1..E2_n; curves l1 = l - sum E1_j, l2 = l - sum E2_j.
Fixture fixture_smn(int m, int n);

/// Blow-up of the Hirzebruch surface F_n at a_i points of each of k fibres
/// (n >= 2, 3 <= k <= n+1, sum 1/a_i < k-2). Basis s (negative section),
/// F (fibre), E{i}_{j}; curves sigma = s and F{i} = F - sum_j E{i}_{j}.
Fixture fixture_hirzebruch(int n, int k, const std::vector<int>& a);

}  // namespace redlab
