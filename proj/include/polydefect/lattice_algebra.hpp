#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polydefect {

using Int = mpz_class;
using Rat = mpq_class;
using IntVector = std::vector<Int>;
using RatVector = std::vector<Rat>;

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  // All rows must share a length; `cols` is used when `rows` is empty.
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Int& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Int& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntMatrix transpose() const;
  bool is_zero() const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void add_col_multiple(std::size_t dst, std::size_t src, const Int& factor);
  void negate_row(std::size_t r);
  void negate_col(std::size_t c);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix& a, const IntMatrix& b) = default;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Int> data_;
};

IntVector operator*(const IntMatrix& m, std::span<const Int> v);

Int gcd_of(std::span<const Int> v);

/// Divides `v` by the gcd of its entries. Throws InputError on the zero vector.
IntVector primitive(std::span<const Int> v);

// Fraction-free (Bareiss) determinant of a square matrix.
Int determinant(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

struct HermiteForm {
  IntMatrix H;  // row-style echelon: positive pivots, entries above a pivot reduced into [0, pivot)
  IntMatrix U;  // unimodular, U * M == H
};

HermiteForm hermite_normal_form(const IntMatrix& m);

struct SmithForm {
  IntMatrix S;  // diagonal d_1 | d_2 | ... with d_i >= 0
  IntMatrix U;  // unimodular row transform
  IntMatrix V;  // unimodular column transform, U * M * V == S
};

SmithForm smith_normal_form(const IntMatrix& m);

// Elementary divisors (nonzero diagonal of the Smith form).
std::vector<Int> elementary_divisors(const IntMatrix& m);

// Inverse of a unimodular matrix, exact. Throws InputError if `u` is not unimodular.
IntMatrix unimodular_inverse(const IntMatrix& u);

// Inverse of a nonsingular square integer matrix over the rationals.
std::vector<RatVector> rational_inverse(const IntMatrix& m);

/// Coordinates on the lattice aff(S) ∩ Z^n of a point set S.
///
/// A point x of the ambient lattice lies in the chart iff the constraint rows
/// annihilate x - origin; its chart coordinates are then the coordinate rows
/// applied to x - origin, and x = origin + Σ y_i basis_i.
class AffineLatticeChart {
 public:
  AffineLatticeChart() = default;
  AffineLatticeChart(IntVector origin, std::vector<IntVector> basis, IntMatrix coordinate_rows,
                     IntMatrix constraint_rows);

  std::size_t ambient_dim() const { return origin_.size(); }
  std::size_t rank() const { return basis_.size(); }
  const IntVector& origin() const { return origin_; }
  const std::vector<IntVector>& basis() const { return basis_; }
  bool is_identity() const;

  // nullopt when x is not a lattice point of the affine hull.
  std::optional<IntVector> coordinates(std::span<const Int> x) const;
  std::optional<RatVector> coordinates(std::span<const Rat> x) const;
  IntVector point(std::span<const Int> y) const;

 private:
  IntVector origin_;
  std::vector<IntVector> basis_;
  IntMatrix coordinate_rows_;
  IntMatrix constraint_rows_;
};

AffineLatticeChart identity_chart(std::size_t n);

// Saturated chart of aff(points). Requires a nonempty point list of equal lengths.
AffineLatticeChart saturated_chart(const std::vector<IntVector>& points);

// Index of the affine lattice generated by `points` inside aff(points) ∩ Z^n.
Int lattice_index(const std::vector<IntVector>& points);

// t (t-1) ... (t-k+1) / k!  for any integer t; zero for k < 0.
Int generalized_binomial(const Int& t, long k);
inline Int generalized_binomial(long t, long k) { return generalized_binomial(Int(t), k); }

Int factorial(long n);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);
std::string to_string(std::span<const Int> v);

}  // namespace polydefect
