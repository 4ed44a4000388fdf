#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

#include "detrunc/error.hpp"

namespace detrunc {

enum class FieldKind { prime, extension, rational };

/// Plain description of a field: F_p, F_{p^l} = F_p[Y]/(modulus), or Q.
/// The modulus is stored constant term first and is monic of degree l.
struct FieldSpec {
  FieldKind kind = FieldKind::rational;
  std::uint64_t p = 0;
  unsigned degree = 1;
  std::vector<std::uint64_t> modulus;

  bool operator==(const FieldSpec&) const = default;

  /// `Q`, `p` or `p^l`.
  std::string to_string() const;
};

class Field;
class Element;
using FieldPtr = std::shared_ptr<const Field>;

/// An immutable field shared between all of its elements.
///
/// Finite field elements are stored as a single code: the base-p number whose
/// digits are the coefficients over F_p, constant term least significant.
/// Ascending codes are the canonical scan order used everywhere a
/// deterministic choice of element is needed. For Q the canonical scan order
/// is 0, 1, 2, ...
class Field : public std::enable_shared_from_this<Field> {
  struct Passkey {};

 public:
  static FieldPtr rationals();
  static FieldPtr prime(std::uint64_t p);
  /// F_{p^l} with the canonical modulus (first irreducible in lexicographic
  /// order). Degree 1 yields the prime field.
  static FieldPtr extension(std::uint64_t p, unsigned degree);
  /// F_{p^l} with an explicit monic irreducible modulus (c0 ... cl).
  static FieldPtr extension(std::uint64_t p, std::vector<std::uint64_t> modulus);
  static FieldPtr make(const FieldSpec& spec);

  Field(Passkey, FieldSpec spec);

  const FieldSpec& spec() const noexcept { return spec_; }
  FieldKind kind() const noexcept { return spec_.kind; }
  bool is_finite() const noexcept { return spec_.kind != FieldKind::rational; }
  std::uint64_t characteristic() const noexcept { return spec_.p; }
  unsigned degree() const noexcept { return spec_.degree; }
  /// Number of elements, 0 for Q.
  std::uint64_t size() const noexcept { return size_; }
  bool same_as(const Field& other) const noexcept {
    return this == &other || spec_ == other.spec_;
  }

  Element zero() const;
  Element one() const;
  Element from_int(std::int64_t value) const;
  Element from_code(std::uint64_t code) const;
  Element from_coefficients(std::span<const std::int64_t> coeffs) const;
  Element from_rational(const mpq_class& value) const;
  /// The index-th element of the canonical scan order.
  Element element_at(std::uint64_t index) const;

  // Arithmetic on raw codes; finite fields only.
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t neg(std::uint64_t a) const;
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const;
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  std::uint64_t reduce_int(std::int64_t value) const;

  std::vector<std::uint64_t> digits(std::uint64_t code) const;
  std::uint64_t encode(std::span<const std::uint64_t> digits) const;

  /// Distinct prime divisors of |F| - 1.
  const std::vector<std::uint64_t>& unit_group_primes() const noexcept {
    return unit_primes_;
  }

 private:
  std::uint64_t mul_slow(std::uint64_t a, std::uint64_t b) const;

  FieldSpec spec_;
  std::uint64_t size_ = 0;
  std::vector<std::uint64_t> unit_primes_;
  std::vector<std::uint64_t> p_powers_;
  // Zech-free log tables for small extension fields; empty otherwise.
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

/// A canonical field element. Elements compare equal iff their
/// representations are identical.
class Element {
 public:
  Element(FieldPtr field, std::uint64_t code);
  Element(FieldPtr field, mpq_class value);

  const FieldPtr& field() const noexcept { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Canonical code of a finite field element.
  std::uint64_t code() const;
  const mpq_class& rational() const;
  /// Coefficients over F_p, constant term first, length l.
  std::vector<std::uint64_t> coefficients() const;

  Element inv() const;
  Element pow(std::uint64_t exponent) const;
  std::string to_string() const;

  friend Element operator+(const Element& a, const Element& b);
  friend Element operator-(const Element& a, const Element& b);
  friend Element operator*(const Element& a, const Element& b);
  friend Element operator/(const Element& a, const Element& b);
  friend Element operator-(const Element& a);
  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }
  Element& operator*=(const Element& b) { return *this = *this * b; }

  friend bool operator==(const Element& a, const Element& b);

 private:
  const Field& same_field(const Element& other) const;

  FieldPtr field_;
  std::variant<std::uint64_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Element& e);

/// Least r >= 1 with a^r = 1.
std::uint64_t order_of(const Element& a);

/// First element in canonical scan order whose order exceeds n, found by
/// enumerating at most n + 1 powers of each candidate.
Element element_of_order(const FieldPtr& field, std::uint64_t n);

/// First element in canonical scan order of order |F| - 1.
Element primitive_element(const FieldPtr& field);

/// True when a^i != 1 for every 1 <= i <= bound. Works over Q as well.
bool has_order_above(const Element& a, std::uint64_t bound);

}  // namespace detrunc
