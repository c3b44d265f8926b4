#include <numeric>

#include "redlab/error.hpp"
#include "redlab/zariski.hpp"

namespace redlab {

Fixture fixture_smn(int m, int n) {
  if (!(m >= n && n >= 4))
    throw Error(ErrorCode::BadParameters, "need m >= n >= 4, got m=" + std::to_string(m) + " n=" + std::to_string(n));
  const std::size_t rank = static_cast<std::size_t>(1 + m + n);
  Matrix form(rank);
  std::vector<std::string> names{"l"};
  form(0, 0) = Rational(1);
  for (std::size_t i = 1; i < rank; ++i) form(i, i) = Rational(-1);
  for (int j = 1; j <= m; ++j) names.push_back("E1_" + std::to_string(j));
  for (int j = 1; j <= n; ++j) names.push_back("E2_" + std::to_string(j));

  Fixture f{PicardLattice(std::move(form), std::move(names)), DivisorClass{Vector(rank)}, {}};
  DivisorClass l1 = f.lattice.basis("l"), l2 = f.lattice.basis("l");
  f.anticanonical.coords[0] = Rational(3);
  for (std::size_t i = 1; i < rank; ++i) {
    f.anticanonical.coords[i] = Rational(-1);
    (i <= static_cast<std::size_t>(m) ? l1 : l2).coords[i] = Rational(-1);
  }
  f.curves = {{"l1", std::move(l1)}, {"l2", std::move(l2)}};
  return f;
}

Fixture fixture_hirzebruch(int n, int k, const std::vector<int>& a) {
  if (n < 2) throw Error(ErrorCode::BadParameters, "need n >= 2");
  if (k < 3 || k > n + 1) throw Error(ErrorCode::BadParameters, "need 3 <= k <= n+1");
  if (a.size() != static_cast<std::size_t>(k)) throw Error(ErrorCode::BadParameters, "need exactly k point counts");
  Rational inverse_sum;
  for (int ai : a) {
    if (ai < 1) throw Error(ErrorCode::BadParameters, "point counts must be positive");
    inverse_sum += Rational(Integer(1), Integer(ai));
  }
  if (!(inverse_sum < Rational(k - 2)))
    throw Error(ErrorCode::BadParameters, "sum of 1/a_i = " + inverse_sum.to_string() + " is not < k-2");

  const std::size_t rank = 2 + static_cast<std::size_t>(std::accumulate(a.begin(), a.end(), 0));
  Matrix form(rank);
  std::vector<std::string> names{"s", "F"};
  form(0, 0) = Rational(-n);
  form(0, 1) = form(1, 0) = Rational(1);
  for (std::size_t i = 2; i < rank; ++i) form(i, i) = Rational(-1);
  for (int i = 1; i <= k; ++i)
    for (int j = 1; j <= a[static_cast<std::size_t>(i - 1)]; ++j)
      names.push_back("E" + std::to_string(i) + "_" + std::to_string(j));

  Fixture f{PicardLattice(std::move(form), std::move(names)), DivisorClass{Vector(rank)}, {}};
  // -K = 2s + (n+2)F - sum of all exceptional classes
  f.anticanonical.coords[0] = Rational(2);
  f.anticanonical.coords[1] = Rational(n + 2);
  for (std::size_t i = 2; i < rank; ++i) f.anticanonical.coords[i] = Rational(-1);

  f.curves.push_back({"sigma", f.lattice.basis("s")});
  std::size_t next = 2;
  for (int i = 1; i <= k; ++i) {
    DivisorClass fi = f.lattice.basis("F");
    for (int j = 1; j <= a[static_cast<std::size_t>(i - 1)]; ++j) fi.coords[next++] = Rational(-1);
    f.curves.push_back({"F" + std::to_string(i), std::move(fi)});
  }
  return f;
}

}  // namespace redlab
