#include "detrunc/repset.hpp"

#include <algorithm>
#include <iterator>
#include <string>

#include "detrunc/extension.hpp"
#include "detrunc/truncation.hpp"

namespace detrunc {

namespace {

std::uint64_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::uint64_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void check_family(const FMatrix& a, const SetFamily& s) {
  if (!s.weights.empty() && s.weights.size() != s.size()) {
    fail(Errc::DimensionMismatch, "one weight per set is required");
  }
  for (const ColumnSet& set : s.sets) {
    for (std::size_t e : set) {
      if (e >= a.cols()) fail(Errc::UnknownElement, "element " + std::to_string(e + 1) + " not in the ground set");
    }
    if (!std::is_sorted(set.begin(), set.end()) || std::adjacent_find(set.begin(), set.end()) != set.end()) {
      fail(Errc::InvalidArgument, "sets must list distinct elements in ascending order");
    }
    if (!independent_f(a, set)) fail(Errc::DependentInputSet, "the family contains a dependent set");
  }
}

// Truncates to p + q rows and builds H_S over a field large enough for
// column_basis_min_weight on it.
PolyMatrix prepare_minors(const FMatrix& a, const SetFamily& s, std::size_t q) {
  check_family(a, s);
  const std::size_t p = s.set_size();
  const std::size_t k = p + q;
  const std::size_t r = rank_f(a);
  if (k > r) {
    fail(Errc::PQExceedsRank, "p + q = " + std::to_string(k) + " exceeds the rank " + std::to_string(r));
  }
  PolyMatrix ak = truncate(a, k).matrix;
  const FieldPtr& w = ak.field();
  if (w->is_finite()) {
    const std::uint64_t n1 = ak.degree_bound() - 1;
    const std::uint64_t rows = binomial(k, p);
    const std::uint64_t minor_points = n1 * p + 1;
    const std::uint64_t basis_points = n1 * p * std::min<std::uint64_t>(rows, s.size()) + 1;
    const std::uint64_t needed = std::max(minor_points, basis_points);
    if (w->size() - 1 < needed) ak = embed_matrix(ak, extend_field(w, needed).embedding);
  }
  return build_minor_matrix(ak, s);
}

}  // namespace

std::size_t SetFamily::set_size() const {
  if (sets.empty()) return 0;
  const std::size_t p = sets.front().size();
  for (const ColumnSet& s : sets) {
    if (s.size() != p) fail(Errc::DimensionMismatch, "all sets of a family must have the same size");
  }
  return p;
}

SetFamily SetFamily::subfamily(const ColumnSet& indices) const {
  SetFamily out;
  for (std::size_t i : indices) {
    out.sets.push_back(sets.at(i));
    if (!weights.empty()) out.weights.push_back(weights.at(i));
  }
  return out;
}

std::vector<ColumnSet> subsets_of_size(std::size_t k, std::size_t p) {
  std::vector<ColumnSet> out;
  if (p > k) return out;
  ColumnSet cur(p);
  for (std::size_t i = 0; i < p; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = p;
    while (i > 0 && cur[i - 1] == k - p + i - 1) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < p; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

PolyMatrix build_minor_matrix(const PolyMatrix& ak, const SetFamily& s) {
  const std::size_t p = s.set_size();
  const std::size_t k = ak.rows();
  if (p > k) fail(Errc::DimensionMismatch, "sets are larger than the number of rows");
  for (const ColumnSet& set : s.sets) {
    for (std::size_t e : set) {
      if (e >= ak.cols()) fail(Errc::DimensionMismatch, "set element outside the column range");
    }
  }
  const std::vector<ColumnSet> row_sets = subsets_of_size(k, p);
  const std::size_t bound = p * (ak.degree_bound() - 1) + 1;
  PolyMatrix h(ak.field(), row_sets.size(), s.size(), bound);
  for (std::size_t i = 0; i < s.size(); ++i) {
    const PolyMatrix cols = ak.select_columns(s.sets[i]).transpose();
    for (std::size_t r = 0; r < row_sets.size(); ++r) {
      h.set(r, i, det_poly(cols.select_columns(row_sets[r])));
    }
  }
  return h;
}

SetFamily repset_basis(const FMatrix& a, const SetFamily& s, std::size_t q) {
  if (s.empty()) return s;
  const PolyMatrix h = prepare_minors(a, s, q);
  return s.subfamily(column_basis_min_weight(h));
}

SetFamily repset_spanning(const FMatrix& a, const SetFamily& s, std::size_t q) {
  if (s.empty()) return s;
  const PolyMatrix h = prepare_minors(a, s, q);
  return s.subfamily(nice_spanning_set(h, s.weights));
}

bool verify_repset(const FMatrix& a, const SetFamily& s, const SetFamily& rep, std::size_t q) {
  for (const ColumnSet& x : rep.sets) {
    if (std::find(s.sets.begin(), s.sets.end(), x) == s.sets.end()) {
      fail(Errc::NotSubfamily, "a representative set is not a member of the family");
    }
  }
  const auto extends = [&](const ColumnSet& x, const ColumnSet& y) {
    ColumnSet u;
    std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(u));
    return u.size() == x.size() + y.size() && independent_f(a, u);
  };
  const std::size_t e = a.cols();
  for (std::size_t size = 0; size <= std::min(q, e); ++size) {
    for (const ColumnSet& y : subsets_of_size(e, size)) {
      const bool needed = std::any_of(s.sets.begin(), s.sets.end(), [&](const ColumnSet& x) { return extends(x, y); });
      if (!needed) continue;
      if (std::none_of(rep.sets.begin(), rep.sets.end(), [&](const ColumnSet& x) { return extends(x, y); })) {
        return false;
      }
    }
  }
  return true;
}

}  // namespace detrunc
