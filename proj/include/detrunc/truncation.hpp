#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "detrunc/extension.hpp"
#include "detrunc/field.hpp"
#include "detrunc/fxmatrix.hpp"
#include "detrunc/poly.hpp"

namespace detrunc {

enum class TruncationMethod { classical, folded };

/// A k x m matrix over F[X]^{<n} whose <= k column subsets have the same
/// independence relation as the columns of the n x m source matrix.
struct TruncationResult {
  PolyMatrix matrix;
  TruncationMethod method;
  std::optional<Element> alpha;  // folded only
  FieldPtr source_field;
  FieldPtr working_field;  // differs from the source when it had to be extended
  std::size_t k;
  std::size_t n;
  std::size_t m;
};

/// P_i(X) = sum_j M[j][i] X^j for column i.
Poly column_polynomial(const FMatrix& m, std::size_t col);

/// Column i becomes (P_i, P_i', ..., P_i^{(k-1)}). Needs char(F) > n or Q.
TruncationResult truncate_classical(const FMatrix& m, std::size_t k);

/// Column i becomes (P_i(X), P_i(alpha X), ..., P_i(alpha^{k-1} X)). Needs
/// alpha of order at least (n-1)(k-1) + 1.
TruncationResult truncate_folded(const FMatrix& m, std::size_t k, const Element& alpha);

struct PreprocessResult {
  FMatrix matrix;   // the input re-expressed over the working field
  Element alpha;    // order >= nk + 1
  Embedding embedding;
};

/// Moves a matrix over a finite field into a field with an element of order
/// at least nk + 1: extends when |F| <= nk + 1, otherwise stays put.
PreprocessResult preprocess_field(const FMatrix& m, std::size_t k);

/// Classical route when char(F) = 0 or char(F) > n, folded route otherwise.
/// On the classical route a finite field is extended (characteristic is
/// unchanged) whenever it has fewer than (n-1)k + 1 nonzero elements, so
/// that the result can be queried with independent_columns_fx.
TruncationResult truncate(const FMatrix& m, std::size_t k);

struct FiniteTruncation {
  FMatrix matrix;       // k x m over `field`
  FieldPtr field;       // K = F[X]/(modulus), flattened over F_p
  Poly modulus;         // irreducible over the working field F, degree r
  Embedding embedding;  // F -> K
};

/// Reads every entry of a truncation as an element of a degree-r extension
/// K = F[X]/(r(X)) of the working field, r >= nk (default nk).
FiniteTruncation embed_finite(const TruncationResult& t, std::optional<unsigned> degree = std::nullopt);

/// R * M for a seeded pseudo-random k x n matrix R (std::minstd_rand). Only
/// a k-truncation with high probability, and the probability is poor over
/// small fields. Entries of R are uniform over finite fields and integers in
/// [-9, 9] over Q.
FMatrix randomized_truncation(const FMatrix& m, std::size_t k, std::uint64_t seed);

FMatrix embed_matrix(const FMatrix& m, const Embedding& e);
PolyMatrix embed_matrix(const PolyMatrix& m, const Embedding& e);

}  // namespace detrunc
