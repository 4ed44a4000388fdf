#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "detrunc/field.hpp"
#include "detrunc/fxmatrix.hpp"
#include "detrunc/poly.hpp"

namespace detrunc {

enum class WronskianKind { classical, folded };

struct WronskianMatrix {
  WronskianKind kind;
  PolyMatrix entries;          // k x k
  std::optional<Element> alpha;  // folded only
  std::size_t degree_bound;    // max input degree + 1
};

/// Entry (i, j) = P_j^{(i)}, the i-th formal derivative (rows from 0).
/// Requires char(F) = 0 or char(F) > degree bound.
WronskianMatrix classical_wronskian(std::span<const Poly> polys);

/// Entry (i, j) = P_j(alpha^i X).
WronskianMatrix folded_wronskian(std::span<const Poly> polys, const Element& alpha);

/// Linear independence over F via the classical Wronskian determinant,
/// tested for vanishing at (n-1)k + 1 canonical points.
bool independent_classical(std::span<const Poly> polys);

/// Linear independence over F via the alpha-folded Wronskian; alpha must
/// have order > (n-1)(k-1).
bool independent_folded(std::span<const Poly> polys, const Element& alpha);

/// Degree bound n of a family: max degree + 1 (at least 1).
std::size_t family_degree_bound(std::span<const Poly> polys);

}  // namespace detrunc
