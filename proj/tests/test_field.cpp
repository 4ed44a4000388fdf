#include <doctest.h>

#include <random>

#include "detrunc/extension.hpp"
#include "detrunc/field.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace detrunc;

namespace {

std::vector<FieldPtr> small_finite_fields() {
  return {Field::prime(2), Field::prime(3), Field::prime(5), Field::prime(7), Field::extension(2, 2),
          Field::extension(2, 3), Field::extension(3, 2), Field::extension(2, 4), Field::extension(5, 2)};
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  auto f5 = Field::prime(5);
  CHECK(f5->from_int(3) * f5->from_int(4) == f5->from_int(2));
  CHECK(f5->from_int(-1) == f5->from_int(4));
  CHECK(f5->from_int(3).inv() == f5->from_int(2));
  CHECK(f5->from_int(2) / f5->from_int(3) == f5->from_int(4));
  CHECK(f5->from_int(2).pow(4).is_one());
  CHECK(f5->size() == 5);
  CHECK(f5->from_int(3).to_string() == "3");
}

TEST_CASE("F_4 multiplication reduces by X^2 + X + 1") {
  auto f4 = Field::extension(2, 2);
  CHECK(f4->spec().modulus == std::vector<std::uint64_t>{1, 1, 1});
  const Element x = f4->from_code(2);
  CHECK(x * x == f4->from_code(3));
  CHECK((x * x).to_string() == "1;1");
}

TEST_CASE("rational arithmetic") {
  auto q = Field::rationals();
  const Element a = q->from_rational(mpq_class(1, 3));
  const Element b = q->from_rational(mpq_class(1, 6));
  CHECK(a + b == q->from_rational(mpq_class(1, 2)));
  CHECK((a + b).to_string() == "1/2");
  CHECK(q->from_rational(mpq_class(2, -4)).to_string() == "-1/2");
  CHECK_FALSE(q->is_finite());
  CHECK(q->size() == 0);
}

TEST_CASE("rational arithmetic matches an independent bignum") {
  auto q = Field::rationals();
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const long an = static_cast<long>(rng() % 2001) - 1000, ad = static_cast<long>(rng() % 999) + 1;
    const long bn = static_cast<long>(rng() % 2001) - 1000, bd = static_cast<long>(rng() % 999) + 1;
    const Element a = q->from_rational(mpq_class(an, ad)), b = q->from_rational(mpq_class(bn, bd));
    const oracle::Rational ra(an, ad), rb(bn, bd);
    CHECK(oracle::to_rational((a + b).rational()) == ra + rb);
    CHECK(oracle::to_rational((a - b).rational()) == ra - rb);
    CHECK(oracle::to_rational((a * b).rational()) == ra * rb);
    if (bn != 0) CHECK(oracle::to_rational((a / b).rational()) == ra / rb);
  }
}

TEST_CASE("finite field arithmetic matches the digit-vector oracle") {
  for (const auto& f : small_finite_fields()) {
    oracle::GF g(f->spec());
    if (f->degree() > 1) CHECK(oracle::irreducible_by_trial_division(oracle::GF(f->characteristic(), {}), f->spec().modulus));
    for (std::uint64_t a = 0; a < f->size(); ++a) {
      for (std::uint64_t b = 0; b < f->size(); ++b) {
        const Element x = f->from_code(a), y = f->from_code(b);
        REQUIRE((x + y).code() == g.add(a, b));
        REQUIRE((x - y).code() == g.sub(a, b));
        REQUIRE((x * y).code() == g.mul(a, b));
        if (b != 0) REQUIRE((x / y).code() == g.mul(a, g.inv(b)));
      }
      if (a != 0) CHECK(f->from_code(a).pow(f->size() - 1).is_one());
    }
  }
}

TEST_CASE("field errors") {
  auto f5 = Field::prime(5);
  auto f7 = Field::prime(7);
  auto q = Field::rationals();
  CHECK_THROWS_AS(f5->zero().inv(), Error);
  try {
    (void)(f5->one() + f7->one());
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FieldMismatch);
  }
  try {
    (void)order_of(f5->zero());
    FAIL("expected ZeroElement");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::ZeroElement);
  }
  try {
    (void)order_of(q->one());
    FAIL("expected InfiniteField");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InfiniteField);
  }
  try {
    (void)q->zero().inv();
    FAIL("expected DivisionByZero");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DivisionByZero);
  }
  try {
    (void)primitive_element(q);
    FAIL("expected InfiniteField");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InfiniteField);
  }
}

TEST_CASE("order_of") {
  auto f5 = Field::prime(5);
  CHECK(order_of(f5->one()) == 1);
  CHECK(order_of(f5->from_int(2)) == 4);
  CHECK(order_of(f5->from_int(4)) == 2);
  for (const auto& f : small_finite_fields()) {
    oracle::GF g(f->spec());
    for (std::uint64_t a = 1; a < f->size(); ++a) {
      const std::uint64_t r = order_of(f->from_code(a));
      CHECK(r == g.order(a));
      CHECK((f->size() - 1) % r == 0);
    }
  }
}

TEST_CASE("element_of_order") {
  CHECK(element_of_order(Field::prime(5), 3) == Field::prime(5)->from_int(2));
  CHECK(element_of_order(Field::prime(7), 2) == Field::prime(7)->from_int(2));
  try {
    (void)element_of_order(Field::prime(2), 1);
    FAIL("expected NoSuchElement");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NoSuchElement);
  }
  for (const auto& f : small_finite_fields()) {
    oracle::GF g(f->spec());
    for (std::uint64_t n = 0; n + 1 < f->size(); ++n) {
      const Element a = element_of_order(f, n);
      CHECK(g.order(a.code()) > n);
      // First qualifying element in scan order.
      for (std::uint64_t c = 1; c < a.code(); ++c) CHECK(g.order(c) <= n);
    }
  }
}

TEST_CASE("primitive_element") {
  CHECK(primitive_element(Field::prime(2)).is_one());
  CHECK(primitive_element(Field::prime(5)) == Field::prime(5)->from_int(2));
  CHECK(primitive_element(Field::extension(2, 2)) == Field::extension(2, 2)->from_code(2));
  for (const auto& f : small_finite_fields()) {
    CHECK(oracle::GF(f->spec()).order(primitive_element(f).code()) == f->size() - 1);
  }
}

TEST_CASE("has_order_above over Q") {
  auto q = Field::rationals();
  CHECK(has_order_above(q->from_int(2), 1000));
  CHECK_FALSE(has_order_above(q->from_int(-1), 2));
  CHECK(has_order_above(q->from_int(-1), 1));
}

TEST_CASE("canonical moduli") {
  CHECK(Field::extension(2, 3)->spec().modulus == std::vector<std::uint64_t>{1, 1, 0, 1});
  CHECK(Field::extension(2, 4)->spec().modulus == std::vector<std::uint64_t>{1, 1, 0, 0, 1});
  CHECK(Field::extension(3, 2)->spec().modulus == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(Field::extension(5, 1)->kind() == FieldKind::prime);
  CHECK_THROWS_AS(Field::extension(2, std::vector<std::uint64_t>{1, 0, 1}), Error);
  CHECK_THROWS_AS(Field::prime(4), Error);
}

TEST_CASE("field spec strings") {
  CHECK(Field::rationals()->spec().to_string() == "Q");
  CHECK(Field::prime(7)->spec().to_string() == "7");
  CHECK(Field::extension(2, 3)->spec().to_string() == "2^3");
  CHECK(Field::make(Field::extension(3, 2)->spec())->same_as(*Field::extension(3, 2)));
}
