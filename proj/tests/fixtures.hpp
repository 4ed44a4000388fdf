#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <vector>

#include "detrunc/fxmatrix.hpp"
#include "oracle.hpp"

namespace fixtures {

using namespace detrunc;

inline Element random_element(const FieldPtr& f, std::mt19937_64& rng, int rational_range = 3) {
  if (f->is_finite()) return f->from_code(rng() % f->size());
  return f->from_int(static_cast<std::int64_t>(rng() % (2 * rational_range + 1)) - rational_range);
}

inline FMatrix random_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  FMatrix m(f, rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m.set(r, c, random_element(f, rng));
  return m;
}

/// Random rows x cols matrix of full row rank, checked with the oracle.
inline FMatrix random_full_rank(const FieldPtr& f, std::size_t rows, std::size_t cols, std::mt19937_64& rng) {
  while (true) {
    FMatrix m = random_matrix(f, rows, cols, rng);
    if (oracle::rank_of(m) == rows) return m;
  }
}

inline FMatrix int_matrix(const FieldPtr& f, std::size_t rows, std::size_t cols, std::initializer_list<std::int64_t> values) {
  std::vector<Element> entries;
  for (std::int64_t v : values) entries.push_back(f->from_int(v));
  return FMatrix(f, rows, cols, std::move(entries));
}

inline Poly int_poly(const FieldPtr& f, std::initializer_list<std::int64_t> coeffs) {
  std::vector<Element> c;
  for (std::int64_t v : coeffs) c.push_back(f->from_int(v));
  return Poly(f, std::move(c));
}

inline Poly random_poly(const FieldPtr& f, std::size_t degree_bound, std::mt19937_64& rng) {
  std::vector<Element> c;
  for (std::size_t i = 0; i < degree_bound; ++i) c.push_back(random_element(f, rng));
  return Poly(f, std::move(c));
}

inline std::vector<std::size_t> range(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace fixtures
