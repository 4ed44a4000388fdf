#include "detrunc/io.hpp"

#include <algorithm>
#include <charconv>
#include <istream>
#include <ostream>
#include <sstream>

namespace detrunc {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream ss(s);
  while (std::getline(ss, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

std::vector<std::string> words(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string w; ss >> w;) out.push_back(w);
  return out;
}

std::uint64_t parse_count(const std::string& s) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) fail(Errc::ParseError, "expected a nonnegative integer, got '" + s + "'");
  return v;
}

mpq_class parse_rational(const std::string& s) {
  const auto slash = s.find('/');
  const auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    return i < t.size() && std::all_of(t.begin() + static_cast<std::ptrdiff_t>(i), t.end(), [](unsigned char c) { return std::isdigit(c); });
  };
  const std::string num = s.substr(0, slash);
  const std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) fail(Errc::ParseError, "malformed number '" + s + "'");
  mpz_class n(num[0] == '+' ? num.substr(1) : num), d(den[0] == '+' ? den.substr(1) : den);
  if (d == 0) fail(Errc::ParseError, "zero denominator in '" + s + "'");
  mpq_class q(n, d);
  q.canonicalize();
  return q;
}

std::string strip_comment(const std::string& line) {
  return line.substr(0, line.find('#'));
}

void write_header(std::ostream& out, const FieldPtr& f, std::size_t rows, std::size_t cols) {
  out << "field " << f->spec().to_string() << '\n';
  if (f->kind() == FieldKind::extension) {
    out << "modulus";
    for (std::uint64_t c : f->spec().modulus) out << ' ' << c;
    out << '\n';
  }
  out << "rows " << rows << '\n' << "cols " << cols << '\n';
}

void write_labels(std::ostream& out, const std::vector<std::string>& labels) {
  if (labels.empty()) return;
  out << "labels";
  for (const std::string& l : labels) out << ' ' << l;
  out << '\n';
}

template <class M>
void write_entries(std::ostream& out, const M& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m.at(r, c).to_string();
    out << '\n';
  }
}

}  // namespace

FieldPtr parse_field(const std::string& spec, const std::vector<std::uint64_t>& modulus) {
  if (spec == "Q") {
    if (!modulus.empty()) fail(Errc::ParseError, "Q takes no modulus");
    return Field::rationals();
  }
  const auto caret = spec.find('^');
  const std::uint64_t p = parse_count(spec.substr(0, caret));
  const std::uint64_t l = caret == std::string::npos ? 1 : parse_count(spec.substr(caret + 1));
  if (l == 0 || l > 64) fail(Errc::ParseError, "bad extension degree in '" + spec + "'");
  if (!modulus.empty()) {
    if (modulus.size() != l + 1) fail(Errc::ParseError, "modulus must have degree " + std::to_string(l));
    return Field::extension(p, modulus);
  }
  return Field::extension(p, static_cast<unsigned>(l));
}

Element parse_element(const FieldPtr& field, const std::string& token) {
  if (token.empty()) fail(Errc::ParseError, "empty entry");
  if (field->kind() != FieldKind::extension) return field->from_rational(parse_rational(token));
  const auto parts = split(token, ';');
  if (parts.size() > field->degree()) fail(Errc::ParseError, "too many coefficients in '" + token + "'");
  Element acc = field->zero();
  Element power = field->one();
  const Element y = field->from_code(field->characteristic());
  for (const std::string& part : parts) {
    const mpq_class c = parse_rational(part);
    if (c.get_den() != 1) fail(Errc::ParseError, "extension coefficients must be integers");
    acc += field->from_rational(c) * power;
    power *= y;
  }
  return acc;
}

Poly parse_poly(const FieldPtr& field, const std::string& token) {
  std::vector<Element> coeffs;
  for (const std::string& part : split(token, ',')) coeffs.push_back(parse_element(field, part));
  return Poly(field, std::move(coeffs));
}

MatrixFile read_matrix_file(std::istream& in, const FieldPtr& field_override) {
  std::string field_spec;
  std::vector<std::uint64_t> modulus;
  std::optional<std::size_t> rows, cols, degree_bound;
  std::optional<std::string> alpha_token;
  MatrixFile file;
  std::vector<std::vector<std::string>> entry_lines;

  for (std::string raw; std::getline(in, raw);) {
    const auto w = words(strip_comment(raw));
    if (w.empty()) continue;
    const std::string& key = w[0];
    const bool header = entry_lines.empty();
    const auto one_value = [&]() -> const std::string& {
      if (w.size() != 2) fail(Errc::ParseError, "'" + key + "' takes one value");
      return w[1];
    };
    if (header && key == "field") {
      field_spec = one_value();
    } else if (header && key == "modulus") {
      for (std::size_t i = 1; i < w.size(); ++i) modulus.push_back(parse_count(w[i]));
    } else if (header && key == "rows") {
      rows = parse_count(one_value());
    } else if (header && key == "cols") {
      cols = parse_count(one_value());
    } else if (header && key == "degree_bound") {
      degree_bound = parse_count(one_value());
    } else if (header && key == "labels") {
      file.labels.assign(w.begin() + 1, w.end());
    } else if (header && key == "method") {
      const std::string& m = one_value();
      if (m == "classical") file.method = TruncationMethod::classical;
      else if (m == "folded") file.method = TruncationMethod::folded;
      else fail(Errc::ParseError, "unknown method '" + m + "'");
    } else if (header && key == "alpha") {
      alpha_token = one_value();
    } else if (header && std::isalpha(static_cast<unsigned char>(key[0]))) {
      fail(Errc::ParseError, "unknown header line '" + key + "'");
    } else {
      entry_lines.push_back(w);
    }
  }
  if (field_spec.empty() && !field_override) fail(Errc::ParseError, "missing 'field' line");
  if (!rows || !cols) fail(Errc::ParseError, "missing 'rows' or 'cols' line");
  file.field = field_override ? field_override : parse_field(field_spec, modulus);
  if (entry_lines.size() != *rows) fail(Errc::ParseError, "expected " + std::to_string(*rows) + " entry rows");
  if (!file.labels.empty()) {
    if (file.labels.size() != *cols) fail(Errc::ParseError, "expected one label per column");
    auto sorted = file.labels;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail(Errc::ParseError, "duplicate labels");
  }
  for (const auto& line : entry_lines) {
    if (line.size() != *cols) fail(Errc::ParseError, "expected " + std::to_string(*cols) + " entries per row");
  }
  if (alpha_token) file.alpha = parse_element(file.field, *alpha_token);

  if (degree_bound) {
    if (*degree_bound == 0) fail(Errc::ParseError, "degree_bound must be positive");
    PolyMatrix m(file.field, *rows, *cols, *degree_bound);
    for (std::size_t r = 0; r < *rows; ++r) {
      for (std::size_t c = 0; c < *cols; ++c) m.set(r, c, parse_poly(file.field, entry_lines[r][c]));
    }
    file.poly = std::move(m);
  } else {
    FMatrix m(file.field, *rows, *cols);
    for (std::size_t r = 0; r < *rows; ++r) {
      for (std::size_t c = 0; c < *cols; ++c) m.set(r, c, parse_element(file.field, entry_lines[r][c]));
    }
    file.matrix = std::move(m);
  }
  return file;
}

void write_matrix(std::ostream& out, const FMatrix& m, const std::vector<std::string>& labels) {
  write_header(out, m.field(), m.rows(), m.cols());
  write_labels(out, labels);
  write_entries(out, m);
}

void write_poly_matrix(std::ostream& out, const PolyMatrix& m, const std::vector<std::string>& labels) {
  write_header(out, m.field(), m.rows(), m.cols());
  out << "degree_bound " << m.degree_bound() << '\n';
  write_labels(out, labels);
  write_entries(out, m);
}

void write_truncation(std::ostream& out, const TruncationResult& t, const std::vector<std::string>& labels) {
  out << "method " << (t.method == TruncationMethod::classical ? "classical" : "folded") << '\n';
  if (t.alpha) out << "alpha " << t.alpha->to_string() << '\n';
  write_poly_matrix(out, t.matrix, labels);
}

void write_finite_truncation(std::ostream& out, const FiniteTruncation& t, const std::vector<std::string>& labels) {
  out << "# base " << t.embedding.source()->spec().to_string() << '\n';
  out << "# extension_modulus " << t.modulus.to_string() << '\n';
  write_matrix(out, t.matrix, labels);
}

std::vector<std::string> effective_labels(const std::vector<std::string>& labels, std::size_t cols) {
  if (!labels.empty()) return labels;
  std::vector<std::string> out;
  for (std::size_t i = 1; i <= cols; ++i) out.push_back(std::to_string(i));
  return out;
}

SetFamily read_family(std::istream& in, const std::vector<std::string>& labels) {
  SetFamily s;
  bool weighted = false, unweighted = false;
  for (std::string raw; std::getline(in, raw);) {
    auto w = words(strip_comment(raw));
    if (w.empty()) continue;
    if (w.back().rfind("w=", 0) == 0) {
      const std::string value = w.back().substr(2);
      std::size_t used = 0;
      double weight = 0;
      try {
        weight = std::stod(value, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != value.size() || weight < 0) fail(Errc::ParseError, "bad weight '" + value + "'");
      s.weights.push_back(weight);
      weighted = true;
      w.pop_back();
    } else {
      unweighted = true;
    }
    ColumnSet set;
    for (const std::string& label : w) {
      auto it = std::find(labels.begin(), labels.end(), label);
      if (it == labels.end()) fail(Errc::UnknownElement, "unknown ground set element '" + label + "'");
      set.push_back(static_cast<std::size_t>(it - labels.begin()));
    }
    std::sort(set.begin(), set.end());
    if (std::adjacent_find(set.begin(), set.end()) != set.end()) fail(Errc::ParseError, "repeated element in a set");
    s.sets.push_back(std::move(set));
  }
  if (weighted && unweighted) fail(Errc::ParseError, "either every set has a weight or none does");
  s.set_size();
  return s;
}

void write_family(std::ostream& out, const SetFamily& s, const std::vector<std::string>& labels) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    bool first = true;
    for (std::size_t e : s.sets[i]) {
      out << (first ? "" : " ") << labels.at(e);
      first = false;
    }
    if (!s.weights.empty()) {
      char buf[64];
      auto res = std::to_chars(buf, buf + sizeof buf, s.weights[i]);
      out << (first ? "" : " ") << "w=" << std::string_view(buf, static_cast<std::size_t>(res.ptr - buf));
    }
    out << '\n';
  }
}

}  // namespace detrunc
