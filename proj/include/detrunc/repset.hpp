#pragma once

#include <cstddef>
#include <vector>

#include "detrunc/fxmatrix.hpp"

namespace detrunc {

/// A p-family: sets of 0-based column indices, each sorted ascending and of
/// the same size. `weights` is empty or holds one weight per set.
struct SetFamily {
  std::vector<ColumnSet> sets;
  WeightFn weights;

  std::size_t size() const noexcept { return sets.size(); }
  bool empty() const noexcept { return sets.empty(); }
  /// Common cardinality p; DimensionMismatch if the sets disagree. 0 when empty.
  std::size_t set_size() const;
  SetFamily subfamily(const ColumnSet& indices) const;
  bool operator==(const SetFamily&) const = default;
};

/// All p-subsets of {0, ..., k-1} in lexicographic order.
std::vector<ColumnSet> subsets_of_size(std::size_t k, std::size_t p);

/// H_S: row I (a p-subset of the k rows, lexicographic), column i holds
/// det(A_k[I, S_i]). The degree bound is p (degree_bound(A_k) - 1) + 1.
PolyMatrix build_minor_matrix(const PolyMatrix& ak, const SetFamily& s);

/// q-representative subfamily of size at most C(p+q, p), picked by a
/// column basis of H_S.
SetFamily repset_basis(const FMatrix& a, const SetFamily& s, std::size_t q);

/// q-representative subfamily of size at most n p C(p+q, p), picked by a
/// nice spanning set of H_S under the family's weights.
SetFamily repset_spanning(const FMatrix& a, const SetFamily& s, std::size_t q);

/// Exhaustive check of the representative property over every Y with
/// |Y| <= q. NotSubfamily if some set of `rep` is not in `s`.
bool verify_repset(const FMatrix& a, const SetFamily& s, const SetFamily& rep, std::size_t q);

}  // namespace detrunc
