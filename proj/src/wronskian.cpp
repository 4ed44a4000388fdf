#include "detrunc/wronskian.hpp"

#include <algorithm>

namespace detrunc {

namespace {

const FieldPtr& family_field(std::span<const Poly> polys) {
  if (polys.empty()) fail(Errc::InvalidArgument, "empty polynomial family");
  for (const Poly& p : polys) {
    if (!p.field()->same_as(*polys.front().field())) fail(Errc::FieldMismatch, "family mixes fields");
  }
  return polys.front().field();
}

void require_characteristic(const FieldPtr& f, std::size_t n) {
  if (f->is_finite() && f->characteristic() <= n) {
    fail(Errc::CharacteristicTooSmall, "classical Wronskian needs char(F) > " + std::to_string(n) +
                                           ", got " + std::to_string(f->characteristic()));
  }
}

// det is a polynomial of degree <= (n-1)k, so it vanishes identically iff it
// vanishes at (n-1)k + 1 distinct points.
bool determinant_nonzero(const PolyMatrix& w, std::size_t n) {
  const std::size_t count = (n - 1) * w.rows() + 1;
  for (const Element& x : evaluation_points(w.field(), count, false)) {
    if (!determinant(w.evaluate(x)).is_zero()) return true;
  }
  return false;
}

}  // namespace

std::size_t family_degree_bound(std::span<const Poly> polys) {
  long deg = 0;
  for (const Poly& p : polys) deg = std::max(deg, p.degree());
  return static_cast<std::size_t>(deg) + 1;
}

WronskianMatrix classical_wronskian(std::span<const Poly> polys) {
  const FieldPtr& f = family_field(polys);
  const std::size_t n = family_degree_bound(polys);
  require_characteristic(f, n);
  const std::size_t k = polys.size();
  PolyMatrix w(f, k, k, n);
  for (std::size_t j = 0; j < k; ++j) {
    Poly d = polys[j];
    for (std::size_t i = 0; i < k; ++i) {
      w.set(i, j, d);
      d = formal_derivative(d);
    }
  }
  return WronskianMatrix{WronskianKind::classical, std::move(w), std::nullopt, n};
}

WronskianMatrix folded_wronskian(std::span<const Poly> polys, const Element& alpha) {
  const FieldPtr& f = family_field(polys);
  if (!alpha.field()->same_as(*f)) fail(Errc::FieldMismatch, "alpha is not in the coefficient field");
  if (alpha.is_zero()) fail(Errc::ZeroScale, "alpha must be nonzero");
  const std::size_t n = family_degree_bound(polys);
  const std::size_t k = polys.size();
  PolyMatrix w(f, k, k, n);
  for (std::size_t j = 0; j < k; ++j) {
    Element scale = f->one();
    for (std::size_t i = 0; i < k; ++i) {
      w.set(i, j, scale_substitute(polys[j], scale));
      scale *= alpha;
    }
  }
  return WronskianMatrix{WronskianKind::folded, std::move(w), alpha, n};
}

bool independent_classical(std::span<const Poly> polys) {
  if (polys.empty()) return true;
  const auto w = classical_wronskian(polys);
  return determinant_nonzero(w.entries, w.degree_bound);
}

bool independent_folded(std::span<const Poly> polys, const Element& alpha) {
  if (polys.empty()) return true;
  if (alpha.is_zero()) fail(Errc::ZeroScale, "alpha must be nonzero");
  const std::size_t n = family_degree_bound(polys);
  const std::size_t bound = (n - 1) * (polys.size() - 1);
  if (!has_order_above(alpha, bound)) {
    fail(Errc::OrderTooSmall, "alpha must have order > " + std::to_string(bound));
  }
  const auto w = folded_wronskian(polys, alpha);
  return determinant_nonzero(w.entries, w.degree_bound);
}

}  // namespace detrunc
