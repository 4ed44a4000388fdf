#include "detrunc/field.hpp"

#include <array>
#include <ostream>
#include <sstream>

#include "detrunc/extension.hpp"
#include "detrunc/poly.hpp"
#include "number_theory.hpp"

namespace detrunc {

namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;
constexpr unsigned kMaxDegree = 63;

}  // namespace

std::string_view errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::ZeroElement: return "ZeroElement";
    case Errc::InfiniteField: return "InfiniteField";
    case Errc::NoSuchElement: return "NoSuchElement";
    case Errc::DegreeTooLarge: return "DegreeTooLarge";
    case Errc::ZeroScale: return "ZeroScale";
    case Errc::CharacteristicTooSmall: return "CharacteristicTooSmall";
    case Errc::FieldTooSmall: return "FieldTooSmall";
    case Errc::FieldTooLarge: return "FieldTooLarge";
    case Errc::OrderTooSmall: return "OrderTooSmall";
    case Errc::NotSquare: return "NotSquare";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::KExceedsN: return "KExceedsN";
    case Errc::DimensionMismatch: return "DimensionMismatch";
    case Errc::DependentInputSet: return "DependentInputSet";
    case Errc::PQExceedsRank: return "PQExceedsRank";
    case Errc::NotSubfamily: return "NotSubfamily";
    case Errc::UnknownElement: return "UnknownElement";
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParseError: return "ParseError";
  }
  return "Unknown";
}

std::string FieldSpec::to_string() const {
  switch (kind) {
    case FieldKind::rational: return "Q";
    case FieldKind::prime: return std::to_string(p);
    case FieldKind::extension: return std::to_string(p) + "^" + std::to_string(degree);
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Field

FieldPtr Field::rationals() {
  static const FieldPtr q = std::make_shared<const Field>(Passkey{}, FieldSpec{});
  return q;
}

FieldPtr Field::prime(std::uint64_t p) {
  if (!nt::is_prime(p) || p >= (std::uint64_t{1} << 63)) {
    fail(Errc::InvalidArgument, "characteristic " + std::to_string(p) + " is not a supported prime");
  }
  return std::make_shared<const Field>(Passkey{}, FieldSpec{FieldKind::prime, p, 1, {}});
}

FieldPtr Field::extension(std::uint64_t p, unsigned degree) {
  if (degree == 0) fail(Errc::InvalidArgument, "extension degree must be positive");
  FieldPtr base = prime(p);
  if (degree == 1) return base;
  if (degree > kMaxDegree || !nt::checked_pow(p, degree)) {
    fail(Errc::FieldTooLarge, "field " + std::to_string(p) + "^" + std::to_string(degree) +
                                  " does not fit in 63 bits");
  }
  Poly g = find_irreducible(base, degree);
  std::vector<std::uint64_t> modulus;
  modulus.reserve(degree + 1);
  for (const Element& c : g.coeffs()) modulus.push_back(c.code());
  return std::make_shared<const Field>(Passkey{}, FieldSpec{FieldKind::extension, p, degree, std::move(modulus)});
}

FieldPtr Field::extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
  FieldPtr base = prime(p);
  if (modulus.size() < 2) fail(Errc::InvalidArgument, "modulus must have degree at least 1");
  if (modulus.back() != 1) fail(Errc::InvalidArgument, "modulus must be monic");
  for (std::uint64_t c : modulus) {
    if (c >= p) fail(Errc::InvalidArgument, "modulus coefficient out of range");
  }
  const auto degree = static_cast<unsigned>(modulus.size() - 1);
  if (degree == 1) return base;
  if (degree > kMaxDegree || !nt::checked_pow(p, degree)) {
    fail(Errc::FieldTooLarge, "extension field does not fit in 63 bits");
  }
  std::vector<Element> coeffs;
  for (std::uint64_t c : modulus) coeffs.push_back(base->from_code(c));
  if (!is_irreducible(Poly(base, std::move(coeffs)))) {
    fail(Errc::InvalidArgument, "modulus is not irreducible over F_" + std::to_string(p));
  }
  return std::make_shared<const Field>(Passkey{}, FieldSpec{FieldKind::extension, p, degree, std::move(modulus)});
}

FieldPtr Field::make(const FieldSpec& spec) {
  switch (spec.kind) {
    case FieldKind::rational: return rationals();
    case FieldKind::prime: return prime(spec.p);
    case FieldKind::extension:
      if (spec.modulus.empty()) return extension(spec.p, spec.degree);
      if (spec.modulus.size() != spec.degree + 1) {
        fail(Errc::InvalidArgument, "modulus degree does not match the extension degree");
      }
      return extension(spec.p, spec.modulus);
  }
  fail(Errc::InvalidArgument, "unknown field kind");
}

Field::Field(Passkey, FieldSpec spec) : spec_(std::move(spec)) {
  if (spec_.kind == FieldKind::rational) return;
  size_ = *nt::checked_pow(spec_.p, spec_.degree);
  unit_primes_ = nt::prime_divisors(size_ - 1);
  p_powers_.resize(spec_.degree);
  for (unsigned i = 0; i < spec_.degree; ++i) p_powers_[i] = *nt::checked_pow(spec_.p, i);

  if (spec_.kind != FieldKind::extension || size_ > kTableLimit) return;
  // Log tables: the first generator in scan order.
  auto slow_pow = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    while (e != 0) {
      if (e & 1) r = mul_slow(r, a);
      a = mul_slow(a, a);
      e >>= 1;
    }
    return r;
  };
  const std::uint64_t units = size_ - 1;
  std::uint64_t gen = 1;
  for (std::uint64_t c = 2; c < size_; ++c) {
    bool primitive = true;
    for (std::uint64_t r : unit_primes_) {
      if (slow_pow(c, units / r) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      gen = c;
      break;
    }
  }
  exp_.resize(2 * units);
  log_.assign(size_, 0);
  std::uint64_t x = 1;
  for (std::uint64_t i = 0; i < units; ++i) {
    exp_[i] = exp_[i + units] = static_cast<std::uint32_t>(x);
    log_[x] = static_cast<std::uint32_t>(i);
    x = mul_slow(x, gen);
  }
}

Element Field::zero() const {
  if (!is_finite()) return Element(shared_from_this(), mpq_class(0));
  return Element(shared_from_this(), std::uint64_t{0});
}

Element Field::one() const {
  if (!is_finite()) return Element(shared_from_this(), mpq_class(1));
  return Element(shared_from_this(), std::uint64_t{1});
}

Element Field::from_int(std::int64_t value) const {
  if (!is_finite()) return Element(shared_from_this(), mpq_class(static_cast<long>(value)));
  return Element(shared_from_this(), reduce_int(value));
}

Element Field::from_code(std::uint64_t code) const {
  if (!is_finite()) fail(Errc::InfiniteField, "codes are only defined for finite fields");
  if (code >= size_) fail(Errc::IndexOutOfRange, "element code out of range");
  return Element(shared_from_this(), code);
}

Element Field::from_coefficients(std::span<const std::int64_t> coeffs) const {
  if (!is_finite()) fail(Errc::InfiniteField, "coefficient vectors need a finite field");
  if (coeffs.size() > spec_.degree) {
    fail(Errc::InvalidArgument, "too many coefficients for a degree " + std::to_string(spec_.degree) + " field");
  }
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < coeffs.size(); ++i) code += reduce_int(coeffs[i]) * p_powers_[i];
  return Element(shared_from_this(), code);
}

Element Field::from_rational(const mpq_class& value) const {
  if (is_finite()) {
    // Map numerator / denominator into the field.
    mpz_class p(std::to_string(spec_.p));
    mpz_class num = value.get_num() % p;
    mpz_class den = value.get_den() % p;
    if (num < 0) num += p;
    if (den == 0) fail(Errc::DivisionByZero, "denominator vanishes in the field");
    auto n = Element(shared_from_this(), static_cast<std::uint64_t>(std::stoull(num.get_str())));
    auto d = Element(shared_from_this(), static_cast<std::uint64_t>(std::stoull(den.get_str())));
    return n / d;
  }
  return Element(shared_from_this(), value);
}

Element Field::element_at(std::uint64_t index) const {
  if (!is_finite()) return Element(shared_from_this(), mpq_class(mpz_class(std::to_string(index))));
  return from_code(index);
}

std::uint64_t Field::reduce_int(std::int64_t value) const {
  const auto p = static_cast<__int128>(spec_.p);
  __int128 r = static_cast<__int128>(value) % p;
  if (r < 0) r += p;
  return static_cast<std::uint64_t>(r);
}

std::vector<std::uint64_t> Field::digits(std::uint64_t code) const {
  std::vector<std::uint64_t> d(spec_.degree);
  for (unsigned i = 0; i < spec_.degree; ++i) {
    d[i] = code % spec_.p;
    code /= spec_.p;
  }
  return d;
}

std::uint64_t Field::encode(std::span<const std::uint64_t> d) const {
  std::uint64_t code = 0;
  for (std::size_t i = 0; i < d.size() && i < spec_.degree; ++i) code += (d[i] % spec_.p) * p_powers_[i];
  return code;
}

std::uint64_t Field::add(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t p = spec_.p;
  if (spec_.kind == FieldKind::prime) {
    std::uint64_t s = a + b;
    return s >= p || s < a ? s - p : s;
  }
  if (p == 2) return a ^ b;
  std::uint64_t r = 0;
  for (unsigned i = 0; i < spec_.degree; ++i) {
    std::uint64_t s = a % p + b % p;
    if (s >= p) s -= p;
    r += s * p_powers_[i];
    a /= p;
    b /= p;
  }
  return r;
}

std::uint64_t Field::neg(std::uint64_t a) const {
  const std::uint64_t p = spec_.p;
  if (spec_.kind == FieldKind::prime) return a == 0 ? 0 : p - a;
  if (p == 2) return a;
  std::uint64_t r = 0;
  for (unsigned i = 0; i < spec_.degree; ++i) {
    std::uint64_t d = a % p;
    r += (d == 0 ? 0 : p - d) * p_powers_[i];
    a /= p;
  }
  return r;
}

std::uint64_t Field::sub(std::uint64_t a, std::uint64_t b) const { return add(a, neg(b)); }

std::uint64_t Field::mul(std::uint64_t a, std::uint64_t b) const {
  if (spec_.kind == FieldKind::prime) return nt::mulmod(a, b, spec_.p);
  if (!exp_.empty()) {
    if (a == 0 || b == 0) return 0;
    return exp_[log_[a] + log_[b]];
  }
  return mul_slow(a, b);
}

std::uint64_t Field::mul_slow(std::uint64_t a, std::uint64_t b) const {
  const std::uint64_t p = spec_.p;
  const unsigned l = spec_.degree;
  std::array<std::uint64_t, kMaxDegree> da{};
  std::array<std::uint64_t, kMaxDegree> db{};
  std::array<std::uint64_t, 2 * kMaxDegree> prod{};
  for (unsigned i = 0; i < l; ++i) {
    da[i] = a % p;
    db[i] = b % p;
    a /= p;
    b /= p;
  }
  // p < 2^32 whenever l >= 2, so products fit in 64 bits.
  for (unsigned i = 0; i < l; ++i) {
    if (da[i] == 0) continue;
    for (unsigned j = 0; j < l; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
  }
  for (unsigned k = 2 * l - 2; k >= l; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (unsigned j = 0; j < l; ++j) {
      const std::uint64_t t = c * spec_.modulus[j] % p;
      prod[k - l + j] = (prod[k - l + j] + p - t) % p;
    }
  }
  std::uint64_t r = 0;
  for (unsigned i = 0; i < l; ++i) r += prod[i] * p_powers_[i];
  return r;
}

std::uint64_t Field::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  while (e != 0) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t Field::inv(std::uint64_t a) const {
  if (a == 0) fail(Errc::DivisionByZero, "zero has no inverse");
  if (!exp_.empty()) return exp_[(size_ - 1) - log_[a]];
  return pow(a, size_ - 2);
}

// ---------------------------------------------------------------------------
// Element

Element::Element(FieldPtr field, std::uint64_t code) : field_(std::move(field)), value_(code) {
  if (!field_->is_finite()) fail(Errc::InvalidArgument, "integer code for the rational field");
  if (code >= field_->size()) fail(Errc::IndexOutOfRange, "element code out of range");
}

Element::Element(FieldPtr field, mpq_class value) : field_(std::move(field)), value_(std::move(value)) {
  if (field_->is_finite()) fail(Errc::InvalidArgument, "fraction for a finite field");
  std::get<mpq_class>(value_).canonicalize();
}

const Field& Element::same_field(const Element& other) const {
  if (field_.get() != other.field_.get() && !field_->same_as(*other.field_)) {
    fail(Errc::FieldMismatch, "operands belong to different fields (" + field_->spec().to_string() + " vs " +
                                  other.field_->spec().to_string() + ")");
  }
  return *field_;
}

bool Element::is_zero() const {
  if (const auto* c = std::get_if<std::uint64_t>(&value_)) return *c == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Element::is_one() const {
  if (const auto* c = std::get_if<std::uint64_t>(&value_)) return *c == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint64_t Element::code() const {
  if (const auto* c = std::get_if<std::uint64_t>(&value_)) return *c;
  fail(Errc::InfiniteField, "rational numbers have no code");
}

const mpq_class& Element::rational() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q;
  fail(Errc::InvalidArgument, "element is not rational");
}

std::vector<std::uint64_t> Element::coefficients() const { return field_->digits(code()); }

Element Element::inv() const {
  if (is_zero()) fail(Errc::DivisionByZero, "zero has no inverse");
  if (field_->is_finite()) return Element(field_, field_->inv(code()));
  return Element(field_, mpq_class(1) / rational());
}

Element Element::pow(std::uint64_t exponent) const {
  if (field_->is_finite()) return Element(field_, field_->pow(code(), exponent));
  mpq_class base = rational();
  mpq_class r = 1;
  while (exponent != 0) {
    if (exponent & 1) r *= base;
    base *= base;
    exponent >>= 1;
  }
  return Element(field_, std::move(r));
}

std::string Element::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  if (field_->kind() == FieldKind::prime) return std::to_string(code());
  std::string out;
  for (std::uint64_t d : coefficients()) {
    if (!out.empty()) out += ';';
    out += std::to_string(d);
  }
  return out;
}

Element operator+(const Element& a, const Element& b) {
  const Field& f = a.same_field(b);
  if (f.is_finite()) return Element(a.field_, f.add(a.code(), b.code()));
  return Element(a.field_, a.rational() + b.rational());
}

Element operator-(const Element& a, const Element& b) {
  const Field& f = a.same_field(b);
  if (f.is_finite()) return Element(a.field_, f.sub(a.code(), b.code()));
  return Element(a.field_, a.rational() - b.rational());
}

Element operator*(const Element& a, const Element& b) {
  const Field& f = a.same_field(b);
  if (f.is_finite()) return Element(a.field_, f.mul(a.code(), b.code()));
  return Element(a.field_, a.rational() * b.rational());
}

Element operator/(const Element& a, const Element& b) {
  a.same_field(b);
  if (b.is_zero()) fail(Errc::DivisionByZero, "division by zero");
  return a * b.inv();
}

Element operator-(const Element& a) {
  if (a.field_->is_finite()) return Element(a.field_, a.field_->neg(a.code()));
  return Element(a.field_, mpq_class(-a.rational()));
}

bool operator==(const Element& a, const Element& b) {
  if (a.field_.get() != b.field_.get() && !a.field_->same_as(*b.field_)) return false;
  return a.value_ == b.value_;
}

std::ostream& operator<<(std::ostream& os, const Element& e) { return os << e.to_string(); }

// ---------------------------------------------------------------------------
// Orders

std::uint64_t order_of(const Element& a) {
  const Field& f = *a.field();
  if (!f.is_finite()) fail(Errc::InfiniteField, "order is only computed in finite fields");
  if (a.is_zero()) fail(Errc::ZeroElement, "zero has no multiplicative order");
  std::uint64_t r = f.size() - 1;
  for (std::uint64_t q : f.unit_group_primes()) {
    while (r % q == 0 && f.pow(a.code(), r / q) == 1) r /= q;
  }
  return r;
}

bool has_order_above(const Element& a, std::uint64_t bound) {
  if (a.is_zero()) return false;
  if (a.field()->is_finite()) return order_of(a) > bound;
  // Over Q only 1 and -1 have finite order.
  if (a.is_one()) return bound < 1;
  if ((-a).is_one()) return bound < 2;
  return true;
}

Element element_of_order(const FieldPtr& field, std::uint64_t n) {
  if (!field->is_finite()) fail(Errc::InfiniteField, "element_of_order needs a finite field");
  const std::uint64_t q = field->size();
  if (q - 1 <= n) {
    fail(Errc::NoSuchElement, "no element of order > " + std::to_string(n) + " in a field of size " +
                                  std::to_string(q));
  }
  for (std::uint64_t c = 1; c < q; ++c) {
    std::uint64_t x = c;
    bool ok = true;
    for (std::uint64_t i = 1; i <= n; ++i) {
      if (x == 1) {
        ok = false;
        break;
      }
      x = field->mul(x, c);
    }
    if (ok) return field->from_code(c);
  }
  fail(Errc::NoSuchElement, "no element of sufficient order");
}

Element primitive_element(const FieldPtr& field) {
  if (!field->is_finite()) fail(Errc::InfiniteField, "Q has no primitive element");
  const std::uint64_t units = field->size() - 1;
  for (std::uint64_t c = 1; c <= units; ++c) {
    Element a = field->from_code(c);
    if (order_of(a) == units) return a;
  }
  fail(Errc::NoSuchElement, "no primitive element found");
}

}  // namespace detrunc
