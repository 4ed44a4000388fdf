#include <doctest.h>

#include "detrunc/extension.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace detrunc;
using fixtures::int_poly;

TEST_CASE("find_irreducible examples") {
  CHECK(find_irreducible(2, 1, 2) == int_poly(Field::prime(2), {1, 1, 1}));
  CHECK(find_irreducible(3, 1, 2) == int_poly(Field::prime(3), {1, 0, 1}));
  for (std::uint64_t p : {2, 3, 5, 7}) CHECK(find_irreducible(p, 1, 1) == Poly::x(Field::prime(p)));
}

TEST_CASE("find_irreducible is the first irreducible in lexicographic order") {
  for (const auto& f : {Field::prime(2), Field::prime(3), Field::extension(2, 2), Field::prime(5)}) {
    oracle::GF g(f->spec());
    const std::uint64_t q = f->size();
    for (unsigned deg = 1; deg <= 4; ++deg) {
      if (q == 5 && deg == 4) continue;
      const Poly found = find_irreducible(f, deg);
      REQUIRE(found.degree() == static_cast<long>(deg));
      std::vector<std::uint64_t> codes;
      for (const auto& c : found.coeffs()) codes.push_back(c.code());
      CHECK(codes.back() == 1);
      CHECK(oracle::irreducible_by_trial_division(g, codes));
      // Every lexicographically smaller monic polynomial is reducible.
      std::uint64_t index = 0;
      for (std::size_t i = deg; i-- > 0;) index = index * q + codes[i];
      for (std::uint64_t smaller = 0; smaller < index; ++smaller) {
        std::vector<std::uint64_t> s(deg + 1, 1);
        std::uint64_t x = smaller;
        for (unsigned i = 0; i < deg; ++i, x /= q) s[i] = x % q;
        CHECK_FALSE(oracle::irreducible_by_trial_division(g, s));
      }
    }
  }
}

TEST_CASE("embeddings are injective ring homomorphisms") {
  const std::vector<std::pair<FieldPtr, FieldPtr>> pairs = {
      {Field::prime(2), Field::extension(2, 3)},      {Field::extension(2, 2), Field::extension(2, 4)},
      {Field::extension(2, 2), Field::extension(2, 6)}, {Field::prime(3), Field::extension(3, 2)},
      {Field::extension(3, 2), Field::extension(3, 4)}, {Field::extension(2, 3), Field::extension(2, 6)}};
  for (const auto& [src, dst] : pairs) {
    const Embedding e(src, dst);
    std::vector<std::uint64_t> images;
    for (std::uint64_t a = 0; a < src->size(); ++a) {
      const Element x = src->from_code(a);
      images.push_back(e(x).code());
      CHECK(e.preimage(e(x)) == x);
      for (std::uint64_t b = 0; b < src->size(); ++b) {
        const Element y = src->from_code(b);
        REQUIRE(e(x + y) == e(x) + e(y));
        REQUIRE(e(x * y) == e(x) * e(y));
      }
    }
    std::sort(images.begin(), images.end());
    CHECK(std::adjacent_find(images.begin(), images.end()) == images.end());
    CHECK(e(src->one()).is_one());
    // Something outside the image has no preimage.
    for (std::uint64_t c = 0; c < dst->size(); ++c) {
      if (!std::binary_search(images.begin(), images.end(), c)) {
        try {
          (void)e.preimage(dst->from_code(c));
          FAIL("expected InvalidArgument");
        } catch (const Error& err) {
          CHECK(err.code() == Errc::InvalidArgument);
        }
        break;
      }
    }
  }
}

TEST_CASE("extend_field") {
  auto a = extend_field(Field::prime(2), 5);
  CHECK(a.field->size() == 8);
  CHECK(order_of(a.alpha) == 7);
  auto b = extend_field(Field::prime(3), 5);
  CHECK(b.field->size() == 9);
  CHECK(order_of(b.alpha) == 8);
  auto c = extend_field(Field::prime(2), 1);
  CHECK(c.field->same_as(*Field::prime(2)));
  for (const auto& f : {Field::prime(2), Field::prime(3), Field::extension(2, 2), Field::prime(5)}) {
    for (std::uint64_t n = f->size() + 1; n <= 300; n += 7) {
      const auto ext = extend_field(f, n);
      CHECK(ext.field->size() > n);
      CHECK(ext.field->size() < n * n);
      CHECK(order_of(ext.alpha) == ext.field->size() - 1);
      CHECK(ext.embedding(f->one()).is_one());
      CHECK(ext.field->degree() % f->degree() == 0);
    }
  }
}
