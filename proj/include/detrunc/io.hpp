#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "detrunc/field.hpp"
#include "detrunc/fxmatrix.hpp"
#include "detrunc/repset.hpp"
#include "detrunc/truncation.hpp"

namespace detrunc {

/// `Q`, `p` or `p^l`; an explicit modulus (c0 ... cl) overrides the
/// canonical one for extensions.
FieldPtr parse_field(const std::string& spec, const std::vector<std::uint64_t>& modulus = {});

/// Integer or `a/b` over prime fields and Q, `a0;a1;...` over extensions.
Element parse_element(const FieldPtr& field, const std::string& token);

/// Comma-separated coefficients, constant term first.
Poly parse_poly(const FieldPtr& field, const std::string& token);

/// Contents of a matrix, PolyMatrix or truncation file. Exactly one of
/// `matrix` and `poly` is set; PolyMatrix files are recognised by their
/// `degree_bound` line.
struct MatrixFile {
  FieldPtr field;
  std::optional<FMatrix> matrix;
  std::optional<PolyMatrix> poly;
  std::vector<std::string> labels;
  std::optional<TruncationMethod> method;
  std::optional<Element> alpha;
};

/// `field_override`, when given, replaces the field named in the file.
MatrixFile read_matrix_file(std::istream& in, const FieldPtr& field_override = nullptr);

void write_matrix(std::ostream& out, const FMatrix& m, const std::vector<std::string>& labels = {});
void write_poly_matrix(std::ostream& out, const PolyMatrix& m, const std::vector<std::string>& labels = {});
void write_truncation(std::ostream& out, const TruncationResult& t, const std::vector<std::string>& labels = {});
/// The embedded matrix in the plain matrix format, preceded by comment lines
/// naming the working field and r(X).
void write_finite_truncation(std::ostream& out, const FiniteTruncation& t, const std::vector<std::string>& labels = {});

/// One set per line: element labels separated by spaces, optionally
/// followed by `w=<weight>`. Labels default to 1..m.
SetFamily read_family(std::istream& in, const std::vector<std::string>& labels);
void write_family(std::ostream& out, const SetFamily& s, const std::vector<std::string>& labels);

/// Labels of a matroid file, or 1..cols when it has none.
std::vector<std::string> effective_labels(const std::vector<std::string>& labels, std::size_t cols);

}  // namespace detrunc
