#include "detrunc/matroid.hpp"

#include <algorithm>
#include <random>

#include "detrunc/truncation.hpp"

namespace detrunc {

namespace {

std::vector<std::string> default_labels(std::size_t m, std::vector<std::string> labels) {
  if (labels.empty()) {
    for (std::size_t i = 0; i < m; ++i) labels.push_back(std::to_string(i + 1));
  }
  if (labels.size() != m) fail(Errc::DimensionMismatch, "one label per column is required");
  return labels;
}

}  // namespace

LinearMatroid::LinearMatroid(FMatrix rep, std::vector<std::string> labels)
    : rep_(std::move(rep)), labels_(default_labels(std::get<FMatrix>(rep_).cols(), std::move(labels))) {
  rank_ = rank_f(std::get<FMatrix>(rep_));
}

LinearMatroid::LinearMatroid(PolyMatrix rep, std::vector<std::string> labels)
    : rep_(std::move(rep)), labels_(default_labels(std::get<PolyMatrix>(rep_).cols(), std::move(labels))) {
  rank_ = column_basis_min_weight(std::get<PolyMatrix>(rep_)).size();
}

std::size_t LinearMatroid::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) fail(Errc::UnknownElement, "unknown ground set element '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

const FMatrix& LinearMatroid::matrix() const {
  if (const auto* m = std::get_if<FMatrix>(&rep_)) return *m;
  fail(Errc::InvalidArgument, "matroid is represented over F(X)");
}

const PolyMatrix& LinearMatroid::poly_matrix() const {
  if (const auto* m = std::get_if<PolyMatrix>(&rep_)) return *m;
  fail(Errc::InvalidArgument, "matroid is represented over F");
}

bool LinearMatroid::independent(std::span<const std::size_t> s) const {
  for (std::size_t e : s) {
    if (e >= ground_size()) fail(Errc::UnknownElement, "element " + std::to_string(e) + " not in the ground set");
  }
  if (s.empty()) return true;
  if (const auto* m = std::get_if<FMatrix>(&rep_)) return independent_f(*m, s);
  return independent_columns_fx(std::get<PolyMatrix>(rep_), s);
}

LinearMatroid truncation_of(const LinearMatroid& m, std::size_t t) {
  if (m.is_truncated()) fail(Errc::InvalidArgument, "matroid is already represented over F(X)");
  if (t > m.rank()) fail(Errc::KExceedsN, "t = " + std::to_string(t) + " exceeds the rank " + std::to_string(m.rank()));
  return LinearMatroid(truncate(m.matrix(), t).matrix, m.labels());
}

LinearMatroid uniform_matroid(std::size_t m, std::size_t r, const FieldPtr& field) {
  if (field->is_finite() && field->size() <= m) {
    fail(Errc::FieldTooSmall, "U_{m,r} needs more than m field elements");
  }
  FMatrix a(field, r, m);
  for (std::size_t c = 0; c < m; ++c) {
    const Element node = field->element_at(c + 1);
    Element power = field->one();
    for (std::size_t i = 0; i < r; ++i) {
      a.set(i, c, power);
      power *= node;
    }
  }
  return LinearMatroid(std::move(a));
}

LinearMatroid graphic_matroid(const Graph& g, const FieldPtr& field) {
  FMatrix a(field, g.vertices, g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    auto [u, v] = g.edges[e];
    if (u >= g.vertices || v >= g.vertices) fail(Errc::IndexOutOfRange, "edge endpoint out of range");
    if (u == v) continue;
    if (u > v) std::swap(u, v);
    a.set(u, e, field->one());
    a.set(v, e, -field->one());
  }
  return LinearMatroid(std::move(a));
}

LinearMatroid random_matroid(std::size_t n, std::size_t m, const FieldPtr& field, std::uint64_t seed) {
  if (n > m) fail(Errc::DimensionMismatch, "full row rank needs n <= m");
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    FMatrix a(field, n, m);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < m; ++j) {
        const std::uint64_t draw = rng();
        a.set(i, j, field->is_finite() ? field->from_code(draw % field->size())
                                       : field->from_int(static_cast<std::int64_t>(draw % 11) - 5));
      }
    }
    if (rank_f(a) == n) return LinearMatroid(std::move(a));
  }
  fail(Errc::InvalidArgument, "could not draw a full-rank matrix");
}

}  // namespace detrunc
