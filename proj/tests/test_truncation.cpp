#include <doctest.h>

#include <random>

#include "detrunc/truncation.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace detrunc;
using fixtures::int_matrix;
using fixtures::int_poly;

namespace {

// Every subset of size <= k keeps its independence verdict.
void check_truncation_property(const FMatrix& m, const PolyMatrix& mk, std::size_t k) {
  for (std::size_t size = 1; size <= std::min(k, m.cols()); ++size) {
    for (const auto& s : oracle::subsets(m.cols(), size)) {
      REQUIRE(independent_columns_fx(mk, s) == oracle::independent(m, s));
    }
  }
}

}  // namespace

TEST_CASE("classical truncation of I_3 over F_7") {
  auto f7 = Field::prime(7);
  const TruncationResult t = truncate_classical(FMatrix::identity(f7, 3), 2);
  CHECK(t.method == TruncationMethod::classical);
  CHECK(t.matrix.degree_bound() == 3);
  CHECK(t.matrix.at(0, 0) == int_poly(f7, {1}));
  CHECK(t.matrix.at(1, 0).is_zero());
  CHECK(t.matrix.at(0, 1) == int_poly(f7, {0, 1}));
  CHECK(t.matrix.at(1, 1) == int_poly(f7, {1}));
  CHECK(t.matrix.at(0, 2) == int_poly(f7, {0, 0, 1}));
  CHECK(t.matrix.at(1, 2) == int_poly(f7, {0, 2}));
  CHECK(truncate(FMatrix::identity(f7, 3), 2).matrix == t.matrix);
  CHECK(column_polynomial(FMatrix::identity(f7, 3), 2) == int_poly(f7, {0, 0, 1}));
}

TEST_CASE("classical truncation of I_2 over Q") {
  auto q = Field::rationals();
  const TruncationResult t = truncate_classical(FMatrix::identity(q, 2), 1);
  CHECK(t.matrix.at(0, 0) == int_poly(q, {1}));
  CHECK(t.matrix.at(0, 1) == int_poly(q, {0, 1}));
  CHECK(independent_columns_fx(t.matrix, std::vector<std::size_t>{0}));
  CHECK(independent_columns_fx(t.matrix, std::vector<std::size_t>{1}));
  CHECK_FALSE(independent_columns_fx(t.matrix, std::vector<std::size_t>{0, 1}));
}

TEST_CASE("folded truncation") {
  auto f5 = Field::prime(5);
  const TruncationResult t = truncate_folded(FMatrix::identity(f5, 2), 2, f5->from_int(2));
  CHECK(t.method == TruncationMethod::folded);
  REQUIRE(t.alpha.has_value());
  CHECK(*t.alpha == f5->from_int(2));
  CHECK(t.matrix.at(0, 1) == int_poly(f5, {0, 1}));
  CHECK(t.matrix.at(1, 1) == int_poly(f5, {0, 2}));
  CHECK(det_poly(t.matrix) == int_poly(f5, {0, 1}));

  const FMatrix dup = int_matrix(f5, 2, 3, {1, 1, 0, 2, 2, 0});
  const TruncationResult d = truncate_folded(dup, 2, f5->from_int(2));
  for (std::size_t r = 0; r < 2; ++r) {
    CHECK(d.matrix.at(r, 0) == d.matrix.at(r, 1));
    CHECK(d.matrix.at(r, 2).is_zero());
  }
  try {
    (void)truncate_folded(FMatrix::identity(f5, 3), 3, f5->from_int(4));
    FAIL("expected OrderTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::OrderTooSmall);
  }
}

TEST_CASE("truncation errors") {
  auto f7 = Field::prime(7);
  try {
    (void)truncate(FMatrix::identity(f7, 3), 5);
    FAIL("expected KExceedsN");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::KExceedsN);
  }
  try {
    (void)truncate_classical(FMatrix::identity(Field::prime(3), 3), 2);
    FAIL("expected CharacteristicTooSmall");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::CharacteristicTooSmall);
  }
  try {
    (void)preprocess_field(FMatrix::identity(Field::rationals(), 2), 1);
    FAIL("expected InfiniteField");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InfiniteField);
  }
}

TEST_CASE("preprocess_field") {
  const auto a = preprocess_field(FMatrix::identity(Field::prime(2), 3), 2);
  CHECK(a.matrix.field()->size() == 8);
  CHECK(order_of(a.alpha) == 7);
  const auto b = preprocess_field(FMatrix::identity(Field::prime(101), 3), 2);
  CHECK(b.matrix.field()->size() == 101);
  CHECK(order_of(b.alpha) > 6);
  const auto c = preprocess_field(FMatrix::identity(Field::prime(3), 1), 1);
  CHECK(c.matrix.field()->size() == 3);
}

TEST_CASE("truncate dispatch") {
  const TruncationResult t = truncate(FMatrix::identity(Field::prime(2), 3), 2);
  CHECK(t.method == TruncationMethod::folded);
  CHECK(t.working_field->size() == 8);
  CHECK(t.source_field->size() == 2);
  check_truncation_property(FMatrix::identity(Field::prime(2), 3), t.matrix, 2);
  // char = n falls to the folded route.
  CHECK(truncate(FMatrix::identity(Field::prime(3), 3), 2).method == TruncationMethod::folded);
  CHECK(truncate(FMatrix::identity(Field::prime(5), 3), 2).method == TruncationMethod::classical);
  const TruncationResult zero = truncate(FMatrix::identity(Field::prime(7), 3), 0);
  CHECK(zero.matrix.rows() == 0);
  CHECK(zero.matrix.cols() == 3);
  CHECK_FALSE(independent_columns_fx(zero.matrix, std::vector<std::size_t>{0}));
}

TEST_CASE("truncation property on random matrices") {
  std::mt19937_64 rng(41);
  for (const auto& f : {Field::prime(2), Field::prime(3), Field::extension(2, 2), Field::prime(5), Field::prime(11), Field::rationals()}) {
    for (int t = 0; t < 8; ++t) {
      const std::size_t n = 1 + rng() % 4, m = n + rng() % 3;
      // Rank-deficient inputs are allowed as well.
      const FMatrix a = t % 4 == 3 ? fixtures::random_matrix(f, n, m, rng) : fixtures::random_full_rank(f, n, m, rng);
      for (std::size_t k = 1; k <= n; ++k) {
        const TruncationResult tr = truncate(a, k);
        CHECK(tr.matrix.rows() == k);
        CHECK(tr.matrix.degree_bound() == n);
        check_truncation_property(a, tr.matrix, k);
        if (oracle::rank_of(a) == n) CHECK(column_basis_min_weight(tr.matrix).size() == k);
        if (k < m) CHECK_FALSE(independent_columns_fx(tr.matrix, fixtures::range(k + 1)));
      }
    }
  }
}

TEST_CASE("classical and folded routes agree") {
  auto f11 = Field::prime(11);
  std::mt19937_64 rng(42);
  for (int t = 0; t < 10; ++t) {
    const FMatrix a = fixtures::random_full_rank(f11, 3, 6, rng);
    const TruncationResult c = truncate_classical(a, 2);
    const TruncationResult fo = truncate_folded(a, 2, element_of_order(f11, 2));
    for (std::size_t size = 1; size <= 2; ++size)
      for (const auto& s : oracle::subsets(6, size))
        CHECK(independent_columns_fx(c.matrix, s) == independent_columns_fx(fo.matrix, s));
  }
}

TEST_CASE("embed_finite") {
  SUBCASE("folded result over F_2") {
    const FMatrix a = int_matrix(Field::prime(2), 2, 4, {1, 0, 1, 1, 0, 1, 1, 0});
    const TruncationResult t = truncate(a, 2);
    const FiniteTruncation e = embed_finite(t);
    CHECK(e.field->size() == 4096);
    CHECK(e.modulus.degree() == 4);
    CHECK(is_irreducible(e.modulus));
    for (std::size_t size = 1; size <= 2; ++size)
      for (const auto& s : oracle::subsets(4, size)) CHECK(oracle::independent(e.matrix, s) == independent_columns_fx(t.matrix, s));
  }
  SUBCASE("classical result over F_7") {
    const TruncationResult t = truncate(FMatrix::identity(Field::prime(7), 3), 2);
    const FiniteTruncation e = embed_finite(t);
    CHECK(e.field->degree() == 6);
    CHECK(e.modulus.degree() == 6);
    CHECK(e.modulus == find_irreducible(Field::prime(7), 6));
    for (std::size_t size = 1; size <= 2; ++size)
      for (const auto& s : oracle::subsets(3, size)) CHECK(oracle::independent(e.matrix, s) == independent_columns_fx(t.matrix, s));
  }
  SUBCASE("constant entries keep their values") {
    auto f3 = Field::prime(3);
    const FMatrix a = int_matrix(f3, 1, 3, {1, 2, 0});
    const TruncationResult t = truncate(a, 1);
    REQUIRE(t.method == TruncationMethod::classical);
    const FiniteTruncation e = embed_finite(t);
    for (std::size_t c = 0; c < 3; ++c) CHECK(e.embedding.preimage(e.matrix.at(0, c)) == a.at(0, c));
  }
  SUBCASE("degree below nk is rejected") {
    const TruncationResult t = truncate(FMatrix::identity(Field::prime(7), 3), 2);
    CHECK_THROWS_AS(embed_finite(t, 5u), Error);
    CHECK(embed_finite(t, 7u).field->degree() == 7);
  }
}

TEST_CASE("randomized truncation") {
  auto f101 = Field::prime(101);
  const FMatrix id = FMatrix::identity(f101, 3);
  const FMatrix r = randomized_truncation(id, 2, 17);
  CHECK(r.rows() == 2);
  CHECK(r == randomized_truncation(id, 2, 17));
  const TruncationResult t = truncate(id, 2);
  for (std::size_t size = 1; size <= 2; ++size)
    for (const auto& s : oracle::subsets(3, size)) CHECK(oracle::independent(r, s) == independent_columns_fx(t.matrix, s));
  // Over F_2 only the deterministic route is guaranteed.
  const FMatrix id2 = FMatrix::identity(Field::prime(2), 3);
  (void)randomized_truncation(id2, 2, 1);
  check_truncation_property(id2, truncate(id2, 2).matrix, 2);
}
