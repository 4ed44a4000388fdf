#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "detrunc/field.hpp"

namespace detrunc {

/// Dense univariate polynomial; coefficient j belongs to X^j. Trailing zero
/// coefficients are always trimmed, so the zero polynomial has no
/// coefficients at all.
class Poly {
 public:
  explicit Poly(FieldPtr field);
  Poly(FieldPtr field, std::vector<Element> coeffs);

  static Poly constant(const Element& c);
  static Poly monomial(const Element& c, std::size_t degree);
  static Poly x(const FieldPtr& field);

  const FieldPtr& field() const noexcept { return field_; }
  std::span<const Element> coeffs() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  Element coeff(std::size_t j) const;
  Element leading() const;

  Element operator()(const Element& at) const;

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Element& c, const Poly& a);
  Poly& operator+=(const Poly& b) { return *this = *this + b; }
  Poly& operator-=(const Poly& b) { return *this = *this - b; }
  Poly& operator*=(const Poly& b) { return *this = *this * b; }

  friend bool operator==(const Poly& a, const Poly& b);

  /// Comma separated coefficients, constant first; `0` for the zero poly.
  std::string to_string() const;

 private:
  void trim();

  FieldPtr field_;
  std::vector<Element> coeffs_;
};

/// P(X) = sum_j v[j] X^j.
Poly vec_to_poly(const FieldPtr& field, std::span<const Element> v);
/// Inverse of vec_to_poly; throws DegreeTooLarge when deg(P) >= n.
std::vector<Element> poly_to_vec(const Poly& p, std::size_t n);

/// i-fold iterated formal derivative.
Poly formal_derivative(const Poly& p, unsigned order = 1);

/// Hasse derivative D^i: the coefficient of Z^i in P(X + Z), computed as
/// sum_j C(j, i) a_j X^(j-i) with binomials reduced into the field.
Poly hasse_derivative(const Poly& p, unsigned order);

/// Q(X) = P(alpha X).
Poly scale_substitute(const Poly& p, const Element& alpha);

Element eval(const Poly& p, const Element& at);

/// Quotient and remainder; the divisor must be nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Monic greatest common divisor (zero when both inputs are zero).
Poly poly_gcd(Poly a, Poly b);
Poly make_monic(const Poly& p);
/// base^e mod m.
Poly powmod(const Poly& base, std::uint64_t e, const Poly& m);

/// Unique polynomial of degree < |points| through the given values.
Poly interpolate(std::span<const Element> points, std::span<const Element> values);

/// lambda with a = lambda * b, if one exists (b nonzero).
std::optional<Element> scalar_ratio(const Poly& a, const Poly& b);

/// Deterministic irreducibility test over a finite field (Rabin's criterion).
bool is_irreducible(const Poly& f);

}  // namespace detrunc
