#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "detrunc/field.hpp"
#include "detrunc/poly.hpp"

namespace detrunc {

/// Ordered (ascending) set of 0-based column indices.
using ColumnSet = std::vector<std::size_t>;
/// Nonnegative weight per column; an empty vector means unit weights.
using WeightFn = std::vector<double>;

/// Dense row-major matrix over a field.
class FMatrix {
 public:
  FMatrix(FieldPtr field, std::size_t rows, std::size_t cols);
  FMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> entries);
  static FMatrix identity(const FieldPtr& field, std::size_t n);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  const Element& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Element value);
  std::vector<Element> column(std::size_t c) const;

  FMatrix select_columns(std::span<const std::size_t> cols) const;
  FMatrix transpose() const;

  friend FMatrix operator*(const FMatrix& a, const FMatrix& b);
  friend bool operator==(const FMatrix& a, const FMatrix& b);

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Element> data_;
};

/// Matrix with entries in F[X]^{<degree_bound}.
class PolyMatrix {
 public:
  PolyMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::size_t degree_bound);
  PolyMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::size_t degree_bound, std::vector<Poly> entries);
  /// Constant polynomials, degree bound 1.
  static PolyMatrix constant(const FMatrix& m);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t degree_bound() const noexcept { return degree_bound_; }

  const Poly& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Poly value);

  /// Substitute X = x in every entry.
  FMatrix evaluate(const Element& x) const;
  PolyMatrix select_columns(std::span<const std::size_t> cols) const;
  PolyMatrix transpose() const;

  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::size_t degree_bound_;
  std::vector<Poly> data_;
};

/// First `count` elements of the canonical scan order, starting at 0 or at
/// the first nonzero element. Throws FieldTooSmall when the field runs out.
std::vector<Element> evaluation_points(const FieldPtr& field, std::size_t count, bool nonzero);

std::size_t rank_f(const FMatrix& m);
bool independent_f(const FMatrix& m, std::span<const std::size_t> cols);
/// Fraction-free (Bareiss) elimination.
Element determinant(const FMatrix& m);

/// Greedy minimum-weight column basis over F: columns are visited by
/// (weight, index) and kept when they raise the rank.
ColumnSet min_weight_basis_f(const FMatrix& m, const WeightFn& w = {});

/// Determinant of a square polynomial matrix, by evaluation at the first
/// (degree_bound - 1) k + 1 canonical points and interpolation.
Poly det_poly(const PolyMatrix& m);

/// Minimum-weight column basis over F(X). Each substitution M(a), for a in
/// the first (degree_bound - 1) min(rows, cols) + 1 nonzero canonical points,
/// gets a greedy basis; the largest of those wins, then the lightest, then
/// the lexicographically smallest.
ColumnSet column_basis_min_weight(const PolyMatrix& m, const WeightFn& w = {});

/// Whether the given columns are linearly independent over F(X): the column
/// basis of the transposed restriction has full size.
bool independent_columns_fx(const PolyMatrix& m, std::span<const std::size_t> cols);

/// Nice spanning set: every column is flattened into the concatenation of
/// its entries' coefficient vectors and a minimum-weight basis of the
/// flattened columns over F is returned. At most degree_bound * rows columns.
ColumnSet nice_spanning_set(const PolyMatrix& m, const WeightFn& w = {});

}  // namespace detrunc
