#include "detrunc/poly.hpp"

#include <algorithm>

#include "number_theory.hpp"

namespace detrunc {

namespace {

void check_same(const Poly& a, const Poly& b) {
  if (a.field().get() != b.field().get() && !a.field()->same_as(*b.field())) {
    fail(Errc::FieldMismatch, "polynomials over different fields");
  }
}

}  // namespace

Poly::Poly(FieldPtr field) : field_(std::move(field)) {}

Poly::Poly(FieldPtr field, std::vector<Element> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (const Element& c : coeffs_) {
    if (c.field().get() != field_.get() && !c.field()->same_as(*field_)) {
      fail(Errc::FieldMismatch, "coefficient from a different field");
    }
  }
  trim();
}

Poly Poly::constant(const Element& c) { return Poly(c.field(), {c}); }

Poly Poly::monomial(const Element& c, std::size_t degree) {
  std::vector<Element> coeffs(degree + 1, c.field()->zero());
  coeffs[degree] = c;
  return Poly(c.field(), std::move(coeffs));
}

Poly Poly::x(const FieldPtr& field) { return Poly(field, {field->zero(), field->one()}); }

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Element Poly::coeff(std::size_t j) const { return j < coeffs_.size() ? coeffs_[j] : field_->zero(); }

Element Poly::leading() const {
  if (coeffs_.empty()) return field_->zero();
  return coeffs_.back();
}

Element Poly::operator()(const Element& at) const { return eval(*this, at); }

Poly operator+(const Poly& a, const Poly& b) {
  check_same(a, b);
  const auto& small = a.coeffs_.size() < b.coeffs_.size() ? a : b;
  const auto& large = a.coeffs_.size() < b.coeffs_.size() ? b : a;
  std::vector<Element> out = large.coeffs_;
  for (std::size_t j = 0; j < small.coeffs_.size(); ++j) out[j] += small.coeffs_[j];
  return Poly(a.field_, std::move(out));
}

Poly operator-(const Poly& a) {
  std::vector<Element> out;
  out.reserve(a.coeffs_.size());
  for (const Element& c : a.coeffs_) out.push_back(-c);
  return Poly(a.field_, std::move(out));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
  check_same(a, b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<Element> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.field_->zero());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(a.field_, std::move(out));
}

Poly operator*(const Element& c, const Poly& a) {
  std::vector<Element> out;
  out.reserve(a.coeffs_.size());
  for (const Element& x : a.coeffs_) out.push_back(c * x);
  return Poly(a.field_, std::move(out));
}

bool operator==(const Poly& a, const Poly& b) {
  if (a.field_.get() != b.field_.get() && !a.field_->same_as(*b.field_)) return false;
  return a.coeffs_ == b.coeffs_;
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (j != 0) out += ',';
    out += coeffs_[j].to_string();
  }
  return out;
}

Poly vec_to_poly(const FieldPtr& field, std::span<const Element> v) {
  return Poly(field, std::vector<Element>(v.begin(), v.end()));
}

std::vector<Element> poly_to_vec(const Poly& p, std::size_t n) {
  if (p.degree() >= static_cast<long>(n)) {
    fail(Errc::DegreeTooLarge, "degree " + std::to_string(p.degree()) + " does not fit in length " + std::to_string(n));
  }
  std::vector<Element> v(n, p.field()->zero());
  std::copy(p.coeffs().begin(), p.coeffs().end(), v.begin());
  return v;
}

Poly formal_derivative(const Poly& p, unsigned order) {
  Poly cur = p;
  for (unsigned step = 0; step < order && !cur.is_zero(); ++step) {
    std::vector<Element> out;
    out.reserve(cur.coeffs().size());
    for (std::size_t j = 1; j < cur.coeffs().size(); ++j) {
      out.push_back(p.field()->from_int(static_cast<std::int64_t>(j)) * cur.coeffs()[j]);
    }
    cur = Poly(p.field(), std::move(out));
  }
  return cur;
}

Poly hasse_derivative(const Poly& p, unsigned order) {
  const auto& f = p.field();
  if (p.degree() < static_cast<long>(order)) return Poly(f);
  const std::size_t top = p.coeffs().size();
  // binom[j] = C(j, order) in the field, by Pascal's rule on a rolling row.
  std::vector<Element> row(order + 1, f->zero());
  row[0] = f->one();
  std::vector<Element> out;
  out.reserve(top - order);
  for (std::size_t j = 0; j < top; ++j) {
    if (j > 0) {
      for (std::size_t i = std::min<std::size_t>(j, order); i >= 1; --i) row[i] = row[i] + row[i - 1];
    }
    if (j >= order) out.push_back(row[order] * p.coeffs()[j]);
  }
  return Poly(f, std::move(out));
}

Poly scale_substitute(const Poly& p, const Element& alpha) {
  if (alpha.is_zero()) fail(Errc::ZeroScale, "scale factor must be nonzero");
  std::vector<Element> out;
  out.reserve(p.coeffs().size());
  Element power = p.field()->one();
  for (const Element& c : p.coeffs()) {
    out.push_back(c * power);
    power *= alpha;
  }
  return Poly(p.field(), std::move(out));
}

Element eval(const Poly& p, const Element& at) {
  Element acc = p.field()->zero();
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  check_same(a, b);
  if (b.is_zero()) fail(Errc::DivisionByZero, "polynomial division by zero");
  const auto& f = a.field();
  if (a.degree() < b.degree()) return {Poly(f), a};
  std::vector<Element> rem(a.coeffs().begin(), a.coeffs().end());
  const std::size_t db = static_cast<std::size_t>(b.degree());
  std::vector<Element> quot(rem.size() - db, f->zero());
  const Element lead_inv = b.leading().inv();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (rem[k].is_zero()) continue;
    Element c = rem[k] * lead_inv;
    quot[k - db] = c;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= c * b.coeffs()[j];
  }
  rem.resize(db, f->zero());
  return {Poly(f, std::move(quot)), Poly(f, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly make_monic(const Poly& p) {
  if (p.is_zero()) return p;
  return p.leading().inv() * p;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return make_monic(a);
}

Poly powmod(const Poly& base, std::uint64_t e, const Poly& m) {
  Poly result = Poly::constant(base.field()->one()) % m;
  Poly b = base % m;
  while (e != 0) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e != 0) b = (b * b) % m;
  }
  return result;
}

Poly interpolate(std::span<const Element> points, std::span<const Element> values) {
  if (points.size() != values.size()) fail(Errc::DimensionMismatch, "points and values differ in length");
  if (points.empty()) fail(Errc::InvalidArgument, "interpolation needs at least one point");
  const auto& f = points.front().field();
  // Newton divided differences, then expansion into the monomial basis.
  std::vector<Element> dd(values.begin(), values.end());
  const std::size_t n = points.size();
  for (std::size_t level = 1; level < n; ++level) {
    for (std::size_t i = n - 1; i >= level; --i) {
      const Element den = points[i] - points[i - level];
      if (den.is_zero()) fail(Errc::InvalidArgument, "interpolation points must be distinct");
      dd[i] = (dd[i] - dd[i - 1]) / den;
    }
  }
  Poly result = Poly::constant(dd[n - 1]);
  for (std::size_t i = n - 1; i-- > 0;) {
    result = result * Poly(f, {-points[i], f->one()}) + Poly::constant(dd[i]);
  }
  return result;
}

std::optional<Element> scalar_ratio(const Poly& a, const Poly& b) {
  check_same(a, b);
  if (b.is_zero()) return std::nullopt;
  Element lambda = a.leading() / b.leading();
  if (a.is_zero() || !(lambda * b == a)) return std::nullopt;
  return lambda;
}

bool is_irreducible(const Poly& f) {
  const auto& field = f.field();
  if (!field->is_finite()) fail(Errc::InfiniteField, "irreducibility test needs a finite field");
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  const Poly g = make_monic(f);
  const auto r = static_cast<std::uint64_t>(g.degree());
  const std::uint64_t q = field->size();
  const Poly x = Poly::x(field);
  // frob[i] = X^(q^i) mod g
  std::vector<Poly> frob{x % g};
  for (std::uint64_t i = 1; i <= r; ++i) frob.push_back(powmod(frob.back(), q, g));
  if (!(frob[r] == x % g)) return false;
  for (std::uint64_t d : nt::prime_divisors(r)) {
    Poly h = frob[r / d] - x;
    if (poly_gcd(h, g).degree() != 0) return false;
  }
  return true;
}

}  // namespace detrunc
