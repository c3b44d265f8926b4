#include "redlab/hjcf.hpp"

#include <algorithm>

#include "redlab/error.hpp"
#include "redlab/matrix.hpp"

namespace redlab {

HJString::HJString(std::vector<int> weights) : weights_(std::move(weights)) {
  if (weights_.empty()) throw Error(ErrorCode::BadParameters, "continued fraction needs at least one term");
  for (int n : weights_)
    if (n < 2) throw Error(ErrorCode::BadParameters, "continued fraction term " + std::to_string(n) + " < 2");
}

HJString HJString::reversed() const {
  std::vector<int> w(weights_.rbegin(), weights_.rend());
  return HJString(std::move(w));
}

HJString HJString::incremented(std::size_t i) const {
  if (i < 1 || i > length()) throw Error(ErrorCode::IndexOutOfRange, "index " + std::to_string(i));
  std::vector<int> w = weights_;
  ++w[i - 1];
  return HJString(std::move(w));
}

std::string HJString::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < weights_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(weights_[i]);
  }
  return out + "]";
}

HJString normalized(const HJString& s) { return std::min(s, s.reversed()); }

HJData uv_sequences(const HJString& s) {
  const std::size_t l = s.length();
  HJData d;
  d.string = s;
  d.u.assign(l + 2, Integer(0));
  d.v.assign(l + 2, Integer(0));
  d.u[1] = 1;
  for (std::size_t i = 1; i <= l; ++i) d.u[i + 1] = s.at(i) * d.u[i] - d.u[i - 1];
  d.v[l] = 1;
  for (std::size_t i = l; i >= 1; --i) d.v[i - 1] = s.at(i) * d.v[i] - d.v[i + 1];
  d.q = d.u[l + 1];
  d.q1 = d.v[1];
  return d;
}

HJFraction hj_eval(const HJString& s) {
  // Same recurrence as uv_sequences, without keeping the arrays.
  Integer prev = 0, cur = 1;
  for (int n : s.weights()) {
    Integer next = n * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  Integer vprev = 0, vcur = 1;  // v_{l+1}, v_l
  const auto& w = s.weights();
  for (std::size_t i = w.size(); i-- > 1;) {
    Integer next = w[i] * vcur - vprev;
    vprev = std::move(vcur);
    vcur = std::move(next);
  }
  return {cur, vcur};
}

HJString hj_expand(const Integer& q, const Integer& q1) {
  if (!(q1 > 0 && q1 < q)) throw Error(ErrorCode::BadFraction, "need 0 < q1 < q, got " + q.get_str() + "/" + q1.get_str());
  Integer g;
  mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), q1.get_mpz_t());
  if (g != 1) throw Error(ErrorCode::BadFraction, q.get_str() + " and " + q1.get_str() + " are not coprime");

  std::vector<int> out;
  Integer a = q, b = q1;
  while (b != 0) {
    if (out.size() >= kMaxExpansionLength)
      throw Error(ErrorCode::BadFraction, "expansion exceeds " + std::to_string(kMaxExpansionLength) + " terms");
    Integer n;
    mpz_cdiv_q(n.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (!n.fits_sint_p()) throw Error(ErrorCode::BadFraction, "continued fraction term does not fit an int");
    out.push_back(static_cast<int>(n.get_si()));
    Integer r = n * b - a;
    a = std::move(b);
    b = std::move(r);
  }
  return HJString(std::move(out));
}

Integer minor_det(const HJString& s, const std::set<std::size_t>& deleted) {
  const std::size_t l = s.length();
  std::vector<std::size_t> keep;
  for (std::size_t i = 1; i <= l; ++i) {
    if (deleted.count(i)) continue;
    keep.push_back(i - 1);
  }
  for (std::size_t i : deleted)
    if (i < 1 || i > l) throw Error(ErrorCode::IndexOutOfRange, "deleted index " + std::to_string(i));
  if (keep.empty()) return 1;

  Matrix full(l);
  for (std::size_t i = 0; i < l; ++i) {
    full(i, i) = Rational(-s.weights()[i]);
    if (i + 1 < l) full(i, i + 1) = full(i + 1, i) = Rational(1);
  }
  const Rational d = det(full.principal(keep));
  return abs(d).numerator();
}

}  // namespace redlab
