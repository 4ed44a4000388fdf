#include "detrunc/fxmatrix.hpp"

#include <algorithm>
#include <numeric>
#include <optional>

namespace detrunc {

namespace {

void check_field(const FieldPtr& field, const Element& e) {
  if (e.field().get() != field.get() && !e.field()->same_as(*field)) {
    fail(Errc::FieldMismatch, "entry from a different field");
  }
}

void check_columns(std::span<const std::size_t> cols, std::size_t limit) {
  for (std::size_t c : cols) {
    if (c >= limit) fail(Errc::IndexOutOfRange, "column " + std::to_string(c) + " out of range");
  }
}

std::vector<double> resolve_weights(const WeightFn& w, std::size_t cols) {
  if (w.empty()) return std::vector<double>(cols, 1.0);
  if (w.size() != cols) fail(Errc::DimensionMismatch, "one weight per column is required");
  for (double x : w) {
    if (!(x >= 0.0)) fail(Errc::InvalidArgument, "weights must be nonnegative");
  }
  return w;
}

// Row-echelon basis grown one vector at a time.
class EchelonBasis {
 public:
  bool insert(std::vector<Element> v) {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const Element c = v[pivots_[i]];
      if (c.is_zero()) continue;
      for (std::size_t j = pivots_[i]; j < v.size(); ++j) {
        if (!rows_[i][j].is_zero()) v[j] -= c * rows_[i][j];
      }
    }
    auto it = std::find_if(v.begin(), v.end(), [](const Element& e) { return !e.is_zero(); });
    if (it == v.end()) return false;
    const auto pivot = static_cast<std::size_t>(it - v.begin());
    const Element s = v[pivot].inv();
    for (std::size_t j = pivot; j < v.size(); ++j) v[j] *= s;
    rows_.push_back(std::move(v));
    pivots_.push_back(pivot);
    return true;
  }
  std::size_t size() const { return rows_.size(); }

 private:
  std::vector<std::vector<Element>> rows_;
  std::vector<std::size_t> pivots_;
};

std::vector<std::size_t> weight_order(const std::vector<double>& w) {
  std::vector<std::size_t> order(w.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return w[a] < w[b]; });
  return order;
}

ColumnSet greedy_basis(const FMatrix& m, const std::vector<std::size_t>& order) {
  EchelonBasis basis;
  ColumnSet chosen;
  for (std::size_t c : order) {
    if (basis.size() == m.rows()) break;
    if (basis.insert(m.column(c))) chosen.push_back(c);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace

// ---------------------------------------------------------------------------
// FMatrix

FMatrix::FMatrix(FieldPtr field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, field_->zero()) {}

FMatrix::FMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::vector<Element> entries)
    : field_(std::move(field)), rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) fail(Errc::DimensionMismatch, "entry count does not match the shape");
  for (const Element& e : data_) check_field(field_, e);
}

FMatrix FMatrix::identity(const FieldPtr& field, std::size_t n) {
  FMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, field->one());
  return m;
}

void FMatrix::set(std::size_t r, std::size_t c, Element value) {
  if (r >= rows_ || c >= cols_) fail(Errc::IndexOutOfRange, "matrix index out of range");
  check_field(field_, value);
  data_[r * cols_ + c] = std::move(value);
}

std::vector<Element> FMatrix::column(std::size_t c) const {
  std::vector<Element> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  return out;
}

FMatrix FMatrix::select_columns(std::span<const std::size_t> cols) const {
  check_columns(cols, cols_);
  std::vector<Element> out;
  out.reserve(rows_ * cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c : cols) out.push_back(at(r, c));
  }
  return FMatrix(field_, rows_, cols.size(), std::move(out));
}

FMatrix FMatrix::transpose() const {
  std::vector<Element> out;
  out.reserve(data_.size());
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  }
  return FMatrix(field_, cols_, rows_, std::move(out));
}

FMatrix operator*(const FMatrix& a, const FMatrix& b) {
  if (a.cols_ != b.rows_) fail(Errc::DimensionMismatch, "inner dimensions differ");
  FMatrix out(a.field_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t j = 0; j < b.cols_; ++j) {
      Element acc = a.field_->zero();
      for (std::size_t t = 0; t < a.cols_; ++t) acc += a.at(i, t) * b.at(t, j);
      out.data_[i * out.cols_ + j] = std::move(acc);
    }
  }
  return out;
}

bool operator==(const FMatrix& a, const FMatrix& b) {
  return a.field_->same_as(*b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------------------
// PolyMatrix

PolyMatrix::PolyMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::size_t degree_bound)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      degree_bound_(std::max<std::size_t>(degree_bound, 1)),
      data_(rows * cols, Poly(field_)) {}

PolyMatrix::PolyMatrix(FieldPtr field, std::size_t rows, std::size_t cols, std::size_t degree_bound,
                       std::vector<Poly> entries)
    : field_(std::move(field)),
      rows_(rows),
      cols_(cols),
      degree_bound_(std::max<std::size_t>(degree_bound, 1)),
      data_(std::move(entries)) {
  if (data_.size() != rows * cols) fail(Errc::DimensionMismatch, "entry count does not match the shape");
  for (const Poly& p : data_) {
    if (!p.field()->same_as(*field_)) fail(Errc::FieldMismatch, "entry from a different field");
    if (p.degree() >= static_cast<long>(degree_bound_)) fail(Errc::DegreeTooLarge, "entry exceeds the degree bound");
  }
}

PolyMatrix PolyMatrix::constant(const FMatrix& m) {
  std::vector<Poly> entries;
  entries.reserve(m.rows() * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) entries.push_back(Poly::constant(m.at(r, c)));
  }
  return PolyMatrix(m.field(), m.rows(), m.cols(), 1, std::move(entries));
}

void PolyMatrix::set(std::size_t r, std::size_t c, Poly value) {
  if (r >= rows_ || c >= cols_) fail(Errc::IndexOutOfRange, "matrix index out of range");
  if (!value.field()->same_as(*field_)) fail(Errc::FieldMismatch, "entry from a different field");
  if (value.degree() >= static_cast<long>(degree_bound_)) fail(Errc::DegreeTooLarge, "entry exceeds the degree bound");
  data_[r * cols_ + c] = std::move(value);
}

FMatrix PolyMatrix::evaluate(const Element& x) const {
  std::vector<Element> out;
  out.reserve(data_.size());
  for (const Poly& p : data_) out.push_back(eval(p, x));
  return FMatrix(field_, rows_, cols_, std::move(out));
}

PolyMatrix PolyMatrix::select_columns(std::span<const std::size_t> cols) const {
  check_columns(cols, cols_);
  std::vector<Poly> out;
  out.reserve(rows_ * cols.size());
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c : cols) out.push_back(at(r, c));
  }
  return PolyMatrix(field_, rows_, cols.size(), degree_bound_, std::move(out));
}

PolyMatrix PolyMatrix::transpose() const {
  std::vector<Poly> out;
  out.reserve(data_.size());
  for (std::size_t c = 0; c < cols_; ++c) {
    for (std::size_t r = 0; r < rows_; ++r) out.push_back(at(r, c));
  }
  return PolyMatrix(field_, cols_, rows_, degree_bound_, std::move(out));
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.field_->same_as(*b.field_) && a.rows_ == b.rows_ && a.cols_ == b.cols_ &&
         a.degree_bound_ == b.degree_bound_ && a.data_ == b.data_;
}

// ---------------------------------------------------------------------------
// Operations

std::vector<Element> evaluation_points(const FieldPtr& field, std::size_t count, bool nonzero) {
  const std::uint64_t first = nonzero ? 1 : 0;
  if (field->is_finite() && field->size() - first < count) {
    fail(Errc::FieldTooSmall, "need " + std::to_string(count) + (nonzero ? " nonzero" : "") +
                                  " evaluation points but the field has " + std::to_string(field->size()) +
                                  " elements");
  }
  std::vector<Element> points;
  points.reserve(count);
  for (std::size_t i = 0; i < count; ++i) points.push_back(field->element_at(first + i));
  return points;
}

std::size_t rank_f(const FMatrix& m) {
  EchelonBasis basis;
  for (std::size_t c = 0; c < m.cols() && basis.size() < m.rows(); ++c) basis.insert(m.column(c));
  return basis.size();
}

bool independent_f(const FMatrix& m, std::span<const std::size_t> cols) {
  check_columns(cols, m.cols());
  if (cols.size() > m.rows()) return false;
  EchelonBasis basis;
  for (std::size_t c : cols) {
    if (!basis.insert(m.column(c))) return false;
  }
  return true;
}

Element determinant(const FMatrix& m) {
  if (m.rows() != m.cols()) fail(Errc::NotSquare, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  const auto& f = m.field();
  if (n == 0) return f->one();
  std::vector<std::vector<Element>> a(n);
  for (std::size_t r = 0; r < n; ++r) {
    a[r].reserve(n);
    for (std::size_t c = 0; c < n; ++c) a[r].push_back(m.at(r, c));
  }
  bool negate = false;
  Element prev = f->one();
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && a[swap][k].is_zero()) ++swap;
      if (swap == n) return f->zero();
      std::swap(a[k], a[swap]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  Element d = a[n - 1][n - 1];
  return negate ? -d : d;
}

ColumnSet min_weight_basis_f(const FMatrix& m, const WeightFn& w) {
  return greedy_basis(m, weight_order(resolve_weights(w, m.cols())));
}

Poly det_poly(const PolyMatrix& m) {
  if (m.rows() != m.cols()) fail(Errc::NotSquare, "determinant of a non-square matrix");
  const std::size_t k = m.rows();
  if (k == 0) return Poly::constant(m.field()->one());
  const std::size_t count = (m.degree_bound() - 1) * k + 1;
  const auto points = evaluation_points(m.field(), count, false);
  std::vector<Element> values;
  values.reserve(count);
  for (const Element& x : points) values.push_back(determinant(m.evaluate(x)));
  return interpolate(points, values);
}

ColumnSet column_basis_min_weight(const PolyMatrix& m, const WeightFn& w) {
  const auto weights = resolve_weights(w, m.cols());
  const auto order = weight_order(weights);
  const std::size_t count = (m.degree_bound() - 1) * std::min(m.rows(), m.cols()) + 1;
  const auto points = evaluation_points(m.field(), count, true);
  std::optional<ColumnSet> best;
  double best_weight = 0.0;
  for (const Element& x : points) {
    ColumnSet c = greedy_basis(m.evaluate(x), order);
    double wc = 0.0;
    for (std::size_t i : c) wc += weights[i];
    const bool better = !best || c.size() > best->size() ||
                        (c.size() == best->size() && (wc < best_weight || (wc == best_weight && c < *best)));
    if (better) {
      best = std::move(c);
      best_weight = wc;
    }
  }
  return best ? *best : ColumnSet{};
}

bool independent_columns_fx(const PolyMatrix& m, std::span<const std::size_t> cols) {
  check_columns(cols, m.cols());
  if (cols.empty()) return true;
  if (cols.size() > m.rows()) return false;
  // Rows of the transposed restriction are the chosen columns; its column
  // basis has full size iff some substitution point gives full row rank.
  const PolyMatrix t = m.select_columns(cols).transpose();
  const std::size_t count = (t.degree_bound() - 1) * std::min(t.rows(), t.cols()) + 1;
  for (const Element& x : evaluation_points(t.field(), count, true)) {
    if (rank_f(t.evaluate(x)) == t.rows()) return true;
  }
  return false;
}

ColumnSet nice_spanning_set(const PolyMatrix& m, const WeightFn& w) {
  const auto weights = resolve_weights(w, m.cols());
  const std::size_t n = m.degree_bound();
  EchelonBasis basis;
  ColumnSet chosen;
  for (std::size_t c : weight_order(weights)) {
    std::vector<Element> flat;
    flat.reserve(n * m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
      const auto v = poly_to_vec(m.at(r, c), n);
      flat.insert(flat.end(), v.begin(), v.end());
    }
    if (basis.insert(std::move(flat))) chosen.push_back(c);
  }
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

}  // namespace detrunc
