#pragma once

#include <cstdint>
#include <vector>

#include "detrunc/field.hpp"
#include "detrunc/poly.hpp"

namespace detrunc {

/// Field embedding F -> K between finite fields of equal characteristic where
/// deg(F) divides deg(K). The generator Y of F = F_p[Y]/(g) is sent to the
/// first root of g found in K (see the constructor); prime fields embed by
/// their residues. Over Q only the identity embedding exists.
class Embedding {
 public:
  Embedding(FieldPtr source, FieldPtr target);
  static Embedding identity(const FieldPtr& field);

  const FieldPtr& source() const noexcept { return source_; }
  const FieldPtr& target() const noexcept { return target_; }
  bool is_identity() const noexcept { return identity_; }
  const Element& generator_image() const { return basis_images_.at(1 % basis_images_.size()); }

  Element operator()(const Element& a) const;
  Poly operator()(const Poly& a) const;
  /// The source element mapping to b; InvalidArgument if b is not in the image.
  Element preimage(const Element& b) const;

 private:
  FieldPtr source_;
  FieldPtr target_;
  bool identity_ = false;
  // Images of Y^0, ..., Y^{l-1}.
  std::vector<Element> basis_images_;
  // Row indices and inverse of an invertible l x l block of the image basis
  // (digits over F_p), used for preimages.
  std::vector<std::size_t> pivot_rows_;
  std::vector<std::uint64_t> pivot_inverse_;
};

/// First monic irreducible polynomial of the given degree over a finite
/// field, in lexicographic order of the coefficient vector read with the
/// constant term least significant.
Poly find_irreducible(const FieldPtr& base, unsigned degree);
Poly find_irreducible(std::uint64_t p, unsigned base_degree, unsigned degree);

struct FieldExtension {
  FieldPtr field;
  Element alpha;  // primitive element of `field`
  Embedding embedding;
};

/// Extension K of f of the smallest degree r with |f|^r > n, together with a
/// primitive element. When |f| > n already, f itself is returned.
FieldExtension extend_field(const FieldPtr& f, std::uint64_t n);

}  // namespace detrunc
