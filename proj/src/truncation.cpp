#include "detrunc/truncation.hpp"

#include <random>

#include "number_theory.hpp"

namespace detrunc {

namespace {

void require_k(const FMatrix& m, std::size_t k) {
  if (k > m.rows()) {
    fail(Errc::KExceedsN, "k = " + std::to_string(k) + " exceeds the row count " + std::to_string(m.rows()));
  }
}

TruncationResult build(const FMatrix& m, std::size_t k, TruncationMethod method, std::optional<Element> alpha) {
  const std::size_t n = m.rows();
  std::vector<Poly> entries(k * m.cols(), Poly(m.field()));
  for (std::size_t c = 0; c < m.cols(); ++c) {
    Poly p = column_polynomial(m, c);
    Element scale = m.field()->one();
    for (std::size_t i = 0; i < k; ++i) {
      if (method == TruncationMethod::classical) {
        entries[i * m.cols() + c] = p;
        p = formal_derivative(p);
      } else {
        entries[i * m.cols() + c] = scale_substitute(p, scale);
        scale *= *alpha;
      }
    }
  }
  PolyMatrix out(m.field(), k, m.cols(), n, std::move(entries));
  return TruncationResult{std::move(out), method, std::move(alpha), m.field(), m.field(), k, n, m.cols()};
}

}  // namespace

Poly column_polynomial(const FMatrix& m, std::size_t col) { return vec_to_poly(m.field(), m.column(col)); }

TruncationResult truncate_classical(const FMatrix& m, std::size_t k) {
  require_k(m, k);
  const auto& f = m.field();
  if (f->is_finite() && f->characteristic() <= m.rows()) {
    fail(Errc::CharacteristicTooSmall, "classical truncation needs char(F) > n = " + std::to_string(m.rows()));
  }
  return build(m, k, TruncationMethod::classical, std::nullopt);
}

TruncationResult truncate_folded(const FMatrix& m, std::size_t k, const Element& alpha) {
  require_k(m, k);
  if (!alpha.field()->same_as(*m.field())) fail(Errc::FieldMismatch, "alpha is not in the matrix field");
  if (alpha.is_zero()) fail(Errc::ZeroScale, "alpha must be nonzero");
  const std::size_t n = std::max<std::size_t>(m.rows(), 1);
  const std::size_t bound = k == 0 ? 0 : (n - 1) * (k - 1);
  if (!has_order_above(alpha, bound)) {
    fail(Errc::OrderTooSmall, "alpha needs order >= " + std::to_string(bound + 1));
  }
  return build(m, k, TruncationMethod::folded, alpha);
}

PreprocessResult preprocess_field(const FMatrix& m, std::size_t k) {
  const auto& f = m.field();
  if (!f->is_finite()) fail(Errc::InfiniteField, "field preprocessing applies to finite fields");
  const std::uint64_t nk = static_cast<std::uint64_t>(m.rows()) * k;
  if (f->size() <= nk + 1) {
    FieldExtension ext = extend_field(f, nk + 1);
    return PreprocessResult{embed_matrix(m, ext.embedding), std::move(ext.alpha), std::move(ext.embedding)};
  }
  return PreprocessResult{m, element_of_order(f, nk), Embedding::identity(f)};
}

TruncationResult truncate(const FMatrix& m, std::size_t k) {
  require_k(m, k);
  const auto& f = m.field();
  const std::size_t n = m.rows();
  if (!f->is_finite() || f->characteristic() > n) {
    const std::uint64_t points = static_cast<std::uint64_t>(n > 0 ? n - 1 : 0) * k + 1;
    if (f->is_finite() && f->size() - 1 < points) {
      FieldExtension ext = extend_field(f, points);
      TruncationResult t = truncate_classical(embed_matrix(m, ext.embedding), k);
      t.source_field = f;
      return t;
    }
    return truncate_classical(m, k);
  }
  PreprocessResult pre = preprocess_field(m, k);
  TruncationResult t = truncate_folded(pre.matrix, k, pre.alpha);
  t.source_field = f;
  return t;
}

FiniteTruncation embed_finite(const TruncationResult& t, std::optional<unsigned> degree) {
  const FieldPtr& f = t.working_field;
  if (!f->is_finite()) fail(Errc::InfiniteField, "embedding into a finite field needs a finite source");
  const auto nk = static_cast<unsigned>(std::max<std::size_t>(t.n * t.k, 1));
  const unsigned r = degree.value_or(nk);
  if (r < nk) fail(Errc::InvalidArgument, "extension degree must be at least nk = " + std::to_string(nk));
  if (!nt::checked_pow(f->size(), r)) fail(Errc::FieldTooLarge, "extension does not fit in 63 bits");

  const FieldPtr k_field = Field::extension(f->characteristic(), f->degree() * r);
  Embedding emb(f, k_field);
  // theta = Y generates K over F_p, hence over F; its minimal polynomial over
  // F is the product of its conjugates under x -> x^|F|. When K = F_p the
  // modulus is X and theta = 0.
  const Element theta = k_field->degree() == 1 ? k_field->zero() : k_field->from_code(f->characteristic());
  Poly min_poly = Poly::constant(k_field->one());
  Element conj = theta;
  for (unsigned i = 0; i < r; ++i) {
    min_poly *= Poly(k_field, {-conj, k_field->one()});
    conj = conj.pow(f->size());
  }
  std::vector<Element> modulus;
  for (const Element& c : min_poly.coeffs()) modulus.push_back(emb.preimage(c));

  std::vector<Element> entries;
  entries.reserve(t.matrix.rows() * t.matrix.cols());
  for (std::size_t i = 0; i < t.matrix.rows(); ++i) {
    for (std::size_t j = 0; j < t.matrix.cols(); ++j) entries.push_back(eval(emb(t.matrix.at(i, j)), theta));
  }
  FMatrix out(k_field, t.matrix.rows(), t.matrix.cols(), std::move(entries));
  return FiniteTruncation{std::move(out), k_field, Poly(f, std::move(modulus)), std::move(emb)};
}

FMatrix randomized_truncation(const FMatrix& m, std::size_t k, std::uint64_t seed) {
  require_k(m, k);
  const auto& f = m.field();
  std::minstd_rand rng(static_cast<std::minstd_rand::result_type>(seed % std::minstd_rand::modulus));
  FMatrix r(f, k, m.rows());
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < m.rows(); ++j) {
      const std::uint64_t draw = (static_cast<std::uint64_t>(rng()) << 31) ^ rng();
      if (f->is_finite()) {
        r.set(i, j, f->from_code(draw % f->size()));
      } else {
        r.set(i, j, f->from_int(static_cast<std::int64_t>(draw % 19) - 9));
      }
    }
  }
  return r * m;
}

FMatrix embed_matrix(const FMatrix& m, const Embedding& e) {
  if (e.is_identity()) return m;
  std::vector<Element> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(e(m.at(r, c)));
  }
  return FMatrix(e.target(), m.rows(), m.cols(), std::move(out));
}

PolyMatrix embed_matrix(const PolyMatrix& m, const Embedding& e) {
  if (e.is_identity()) return m;
  std::vector<Poly> out;
  out.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out.push_back(e(m.at(r, c)));
  }
  return PolyMatrix(e.target(), m.rows(), m.cols(), m.degree_bound(), std::move(out));
}

}  // namespace detrunc
