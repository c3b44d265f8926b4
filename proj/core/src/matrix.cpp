#include "redlab/matrix.hpp"

#include <utility>

#include "redlab/error.hpp"

namespace redlab {

Matrix::Matrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<long>> rows) : Matrix(rows.size()) {
  std::size_t i = 0;
  for (const auto& row : rows) {
    if (row.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "matrix literal is not square");
    std::size_t j = 0;
    for (long v : row) (*this)(i, j++) = Rational(v);
    ++i;
  }
}

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = Rational(1);
  return m;
}

bool Matrix::is_symmetric() const {
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i + 1; j < dim_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

Matrix Matrix::principal(std::span<const std::size_t> keep) const {
  Matrix out(keep.size());
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j) out(i, j) = (*this)(keep[i], keep[j]);
  return out;
}

Vector Matrix::operator*(std::span<const Rational> x) const {
  if (x.size() != dim_) throw Error(ErrorCode::DimensionMismatch, "vector length differs from matrix dimension");
  Vector out(dim_);
  for (std::size_t i = 0; i < dim_; ++i) {
    Rational acc;
    for (std::size_t j = 0; j < dim_; ++j)
      if (!(*this)(i, j).is_zero()) acc += (*this)(i, j) * x[j];
    out[i] = std::move(acc);
  }
  return out;
}

namespace {

using IntRows = std::vector<std::vector<Integer>>;

// Scales every row by the lcm of its denominators. `extra` (if non-empty)
// is treated as an augmented last column. Returns the product of the scale
// factors, which is always positive.
Integer to_integer_rows(const Matrix& m, std::span<const Rational> extra, IntRows& out) {
  const std::size_t n = m.dim();
  const std::size_t width = n + (extra.empty() ? 0 : 1);
  out.assign(n, std::vector<Integer>(width));
  Integer scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).raw().get_den_mpz_t());
    if (!extra.empty()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), extra[i].raw().get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) out[i][j] = m(i, j).numerator() * (l / m(i, j).denominator());
    if (!extra.empty()) out[i][n] = extra[i].numerator() * (l / extra[i].denominator());
    scale *= l;
  }
  return scale;
}

// In-place Bareiss forward elimination on the first `n` columns with row
// pivoting. Returns false if a zero column is hit (singular). `sign` tracks
// row swaps.
bool bareiss_forward(IntRows& a, std::size_t n, int& sign) {
  const std::size_t width = a.empty() ? 0 : a[0].size();
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return false;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < width; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return true;
}

}  // namespace

Rational det(const Matrix& m) {
  const std::size_t n = m.dim();
  if (n == 0) return Rational(1);
  IntRows a;
  const Integer scale = to_integer_rows(m, {}, a);
  int sign = 1;
  if (!bareiss_forward(a, n, sign)) return Rational(0);
  return Rational(sign * a[n - 1][n - 1], scale);
}

Vector solve_linear(const Matrix& m, std::span<const Rational> b) {
  const std::size_t n = m.dim();
  if (b.size() != n) throw Error(ErrorCode::DimensionMismatch, "right-hand side length differs from matrix dimension");
  if (n == 0) return {};
  IntRows a;
  to_integer_rows(m, b, a);
  int sign = 1;
  if (!bareiss_forward(a, n, sign) || a[n - 1][n - 1] == 0)
    throw Error(ErrorCode::SingularMatrix, "matrix of dimension " + std::to_string(n) + " is singular");

  Vector x(n);
  for (std::size_t k = n; k-- > 0;) {
    Rational acc(a[k][n]);
    for (std::size_t j = k + 1; j < n; ++j)
      if (a[k][j] != 0) acc -= Rational(a[k][j]) * x[j];
    x[k] = acc / Rational(a[k][k]);
  }
  return x;
}

bool is_negative_definite(const Matrix& m) {
  if (!m.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "negative-definiteness needs a symmetric matrix");
  const std::size_t n = m.dim();
  IntRows a;
  to_integer_rows(m, {}, a);
  // Without pivoting the k-th Bareiss pivot equals the k-th leading principal
  // minor of the row-scaled matrix; row scales are positive so signs agree.
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    const int expected = (k % 2 == 0) ? -1 : 1;
    if (sgn(a[k][k]) != expected) return false;
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = a[k][k];
  }
  return true;
}

}  // namespace redlab
