#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "detrunc/fxmatrix.hpp"

namespace detrunc {

/// Matroid on the columns of a representation matrix, either over F or over
/// F(X) (the output of a truncation). Ground set elements are 0-based column
/// indices; labels are only used for input and output.
class LinearMatroid {
 public:
  explicit LinearMatroid(FMatrix rep, std::vector<std::string> labels = {});
  explicit LinearMatroid(PolyMatrix rep, std::vector<std::string> labels = {});

  std::size_t ground_size() const noexcept { return labels_.size(); }
  std::size_t rank() const noexcept { return rank_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::size_t index_of(const std::string& label) const;

  bool is_truncated() const noexcept { return std::holds_alternative<PolyMatrix>(rep_); }
  const FMatrix& matrix() const;
  const PolyMatrix& poly_matrix() const;

  bool independent(std::span<const std::size_t> s) const;

 private:
  std::variant<FMatrix, PolyMatrix> rep_;
  std::vector<std::string> labels_;
  std::size_t rank_ = 0;
};

/// The t-truncation, represented by truncate(matrix, t).
LinearMatroid truncation_of(const LinearMatroid& m, std::size_t t);

/// U_{m,r}: the r x m Vandermonde matrix on the nodes 1..m.
LinearMatroid uniform_matroid(std::size_t m, std::size_t r, const FieldPtr& field);

struct Graph {
  std::size_t vertices = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
};

/// Signed vertex-edge incidence matrix: +1 at the smaller endpoint, -1 at
/// the larger one. Loops give zero columns.
LinearMatroid graphic_matroid(const Graph& g, const FieldPtr& field);

/// Uniformly random n x m matrix of full row rank (std::mt19937_64 seeded
/// with `seed`, up to 1000 attempts). Entries over Q are integers in [-5, 5].
LinearMatroid random_matroid(std::size_t n, std::size_t m, const FieldPtr& field, std::uint64_t seed);

}  // namespace detrunc
