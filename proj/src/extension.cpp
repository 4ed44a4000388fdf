#include "detrunc/extension.hpp"

#include "number_theory.hpp"

namespace detrunc {

namespace {

// Inverse of a square matrix over F_p (row-major), or empty if singular.
std::vector<std::uint64_t> invert_mod_p(std::vector<std::uint64_t> a, std::size_t n, std::uint64_t p) {
  std::vector<std::uint64_t> inv(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) inv[i * n + i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv * n + col] == 0) ++piv;
    if (piv == n) return {};
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a[piv * n + j], a[col * n + j]);
      std::swap(inv[piv * n + j], inv[col * n + j]);
    }
    const std::uint64_t s = nt::powmod(a[col * n + col], p - 2, p);
    for (std::size_t j = 0; j < n; ++j) {
      a[col * n + j] = nt::mulmod(a[col * n + j], s, p);
      inv[col * n + j] = nt::mulmod(inv[col * n + j], s, p);
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r * n + col] == 0) continue;
      const std::uint64_t c = a[r * n + col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r * n + j] = (a[r * n + j] + p - nt::mulmod(c, a[col * n + j], p)) % p;
        inv[r * n + j] = (inv[r * n + j] + p - nt::mulmod(c, inv[col * n + j], p)) % p;
      }
    }
  }
  return inv;
}

}  // namespace

Embedding::Embedding(FieldPtr source, FieldPtr target) : source_(std::move(source)), target_(std::move(target)) {
  if (source_->same_as(*target_)) {
    identity_ = true;
    return;
  }
  if (!source_->is_finite() || !target_->is_finite() || source_->characteristic() != target_->characteristic() ||
      target_->degree() % source_->degree() != 0) {
    fail(Errc::InvalidArgument, "no embedding of " + source_->spec().to_string() + " into " +
                                    target_->spec().to_string());
  }
  const unsigned l = source_->degree();
  const std::uint64_t p = source_->characteristic();
  if (l == 1) {
    basis_images_.push_back(target_->one());
    pivot_rows_.push_back(0);
    pivot_inverse_.push_back(1);
    return;
  }
  // The image of F lies in the subgroup of K^* of order q - 1, which is the
  // image of x -> x^((Q-1)/(q-1)). Find a generator h of that subgroup and
  // take the first power of h that is a root of the modulus of F.
  const std::uint64_t q = source_->size();
  const std::uint64_t big = target_->size();
  const std::uint64_t cofactor = (big - 1) / (q - 1);
  const auto q_primes = nt::prime_divisors(q - 1);
  std::vector<Element> modulus;
  for (std::uint64_t c : source_->spec().modulus) modulus.push_back(target_->from_code(c));
  const Poly g(target_, std::move(modulus));

  std::optional<Element> root;
  for (std::uint64_t c = 2; c < big && !root; ++c) {
    const Element h = target_->from_code(c).pow(cofactor);
    bool generates = true;
    for (std::uint64_t r : q_primes) {
      if (h.pow((q - 1) / r).is_one()) {
        generates = false;
        break;
      }
    }
    if (!generates) continue;
    Element x = h;
    for (std::uint64_t j = 1; j < q; ++j, x *= h) {
      if (g(x).is_zero()) {
        root = x;
        break;
      }
    }
    if (!root) fail(Errc::InvalidArgument, "modulus has no root in the target field");
  }
  if (!root) fail(Errc::InvalidArgument, "no subgroup generator found");

  Element power = target_->one();
  for (unsigned i = 0; i < l; ++i, power *= *root) basis_images_.push_back(power);

  // Greedily keep digit rows that stay linearly independent.
  const unsigned big_l = target_->degree();
  std::vector<std::vector<std::uint64_t>> digits;
  for (const Element& b : basis_images_) digits.push_back(b.coefficients());
  std::vector<std::uint64_t> block;
  for (unsigned row = 0; row < big_l && pivot_rows_.size() < l; ++row) {
    std::vector<std::uint64_t> trial = block;
    for (unsigned i = 0; i < l; ++i) trial.push_back(digits[i][row]);
    const std::size_t rows = pivot_rows_.size() + 1;
    std::vector<std::uint64_t> m = trial;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < l && rank < rows; ++col) {
      std::size_t piv = rank;
      while (piv < rows && m[piv * l + col] == 0) ++piv;
      if (piv == rows) continue;
      for (std::size_t j = 0; j < l; ++j) std::swap(m[piv * l + j], m[rank * l + j]);
      const std::uint64_t s = nt::powmod(m[rank * l + col], p - 2, p);
      for (std::size_t r = 0; r < rows; ++r) {
        if (r == rank || m[r * l + col] == 0) continue;
        const std::uint64_t c = nt::mulmod(m[r * l + col], s, p);
        for (std::size_t j = 0; j < l; ++j) m[r * l + j] = (m[r * l + j] + p - nt::mulmod(c, m[rank * l + j], p)) % p;
      }
      ++rank;
    }
    if (rank == rows) {
      block = std::move(trial);
      pivot_rows_.push_back(row);
    }
  }
  pivot_inverse_ = invert_mod_p(block, l, p);
  if (pivot_inverse_.empty()) fail(Errc::InvalidArgument, "embedding basis is singular");
}

Embedding Embedding::identity(const FieldPtr& field) { return Embedding(field, field); }

Element Embedding::operator()(const Element& a) const {
  if (!a.field()->same_as(*source_)) fail(Errc::FieldMismatch, "element is not in the embedding source");
  if (identity_) return Element(a);
  if (source_->degree() == 1) return target_->from_code(a.code());
  const auto d = a.coefficients();
  Element out = target_->zero();
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] != 0) out += target_->from_code(d[i]) * basis_images_[i];
  }
  return out;
}

Poly Embedding::operator()(const Poly& a) const {
  if (identity_) return a;
  std::vector<Element> out;
  out.reserve(a.coeffs().size());
  for (const Element& c : a.coeffs()) out.push_back((*this)(c));
  return Poly(target_, std::move(out));
}

Element Embedding::preimage(const Element& b) const {
  if (!b.field()->same_as(*target_)) fail(Errc::FieldMismatch, "element is not in the embedding target");
  if (identity_) return b;
  const std::uint64_t p = source_->characteristic();
  const std::size_t l = source_->degree();
  const auto d = b.coefficients();
  std::vector<std::uint64_t> c(l, 0);
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) {
      c[i] = (c[i] + nt::mulmod(pivot_inverse_[i * l + j], d[pivot_rows_[j]], p)) % p;
    }
  }
  Element a = source_->from_code(source_->encode(c));
  if (!((*this)(a) == b)) fail(Errc::InvalidArgument, "element is not in the image of the embedding");
  return a;
}

Poly find_irreducible(const FieldPtr& base, unsigned degree) {
  if (!base->is_finite()) fail(Errc::InfiniteField, "irreducible search needs a finite field");
  if (degree == 0) fail(Errc::InvalidArgument, "degree must be positive");
  const std::uint64_t q = base->size();
  const auto count = nt::checked_pow(q, degree);
  if (!count) fail(Errc::FieldTooLarge, "search space too large");
  std::vector<Element> coeffs(degree + 1, base->zero());
  coeffs[degree] = base->one();
  for (std::uint64_t index = 0; index < *count; ++index) {
    std::uint64_t rest = index;
    for (unsigned j = 0; j < degree; ++j) {
      coeffs[j] = base->from_code(rest % q);
      rest /= q;
    }
    if (degree > 1 && coeffs[0].is_zero()) continue;
    Poly f(base, coeffs);
    if (degree > 1 && q <= 64) {
      bool has_root = false;
      for (std::uint64_t c = 0; c < q && !has_root; ++c) has_root = f(base->from_code(c)).is_zero();
      if (has_root) continue;
    }
    if (is_irreducible(f)) return f;
  }
  fail(Errc::NoSuchElement, "no irreducible polynomial found");
}

Poly find_irreducible(std::uint64_t p, unsigned base_degree, unsigned degree) {
  return find_irreducible(Field::extension(p, base_degree), degree);
}

FieldExtension extend_field(const FieldPtr& f, std::uint64_t n) {
  if (!f->is_finite()) fail(Errc::InfiniteField, "Q cannot be extended to a finite field");
  if (f->size() > n) return FieldExtension{f, primitive_element(f), Embedding::identity(f)};
  unsigned r = 1;
  while (true) {
    auto size = nt::checked_pow(f->size(), r);
    if (!size) fail(Errc::FieldTooLarge, "extension does not fit in 63 bits");
    if (*size > n) break;
    ++r;
  }
  FieldPtr k = Field::extension(f->characteristic(), f->degree() * r);
  Element alpha = primitive_element(k);
  return FieldExtension{k, std::move(alpha), Embedding(f, k)};
}

}  // namespace detrunc
