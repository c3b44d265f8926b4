#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "redlab/rational.hpp"

namespace redlab {

using Vector = std::vector<Rational>;

/// Dense square matrix of exact rationals, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim);
  Matrix(std::initializer_list<std::initializer_list<long>> rows);

  static Matrix identity(std::size_t dim);

  std::size_t dim() const noexcept { return dim_; }

  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * dim_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * dim_ + j]; }

  bool is_symmetric() const;

  /// Principal submatrix keeping only the listed indices, in the given order.
  Matrix principal(std::span<const std::size_t> keep) const;

  Vector operator*(std::span<const Rational> x) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<Rational> entries_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Rows are first
/// scaled to integers, so every intermediate value is an integer.
Rational det(const Matrix& m);

/// Exact solution of m * x = b. Throws Error(SingularMatrix) when det(m) == 0.
Vector solve_linear(const Matrix& m, std::span<const Rational> b);

/// Leading-principal-minor test: (-1)^k * D_k > 0 for k = 1..dim.
/// Throws Error(NotSymmetric) for asymmetric input.
bool is_negative_definite(const Matrix& m);

}  // namespace redlab
