#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "detrunc/extension.hpp"
#include "detrunc/io.hpp"
#include "detrunc/repset.hpp"
#include "detrunc/truncation.hpp"

namespace detrunc::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::ifstream open_input(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return in;
}

// Either one of the labels, or a 1-based column index when no labels exist.
ColumnSet parse_columns(const std::string& spec, const std::vector<std::string>& labels) {
  ColumnSet cols;
  std::istringstream ss(spec);
  for (std::string item; std::getline(ss, item, ',');) {
    if (item.empty()) continue;
    auto it = std::find(labels.begin(), labels.end(), item);
    if (it == labels.end()) fail(Errc::UnknownElement, "unknown column '" + item + "'");
    cols.push_back(static_cast<std::size_t>(it - labels.begin()));
  }
  std::sort(cols.begin(), cols.end());
  cols.erase(std::unique(cols.begin(), cols.end()), cols.end());
  return cols;
}

struct Options {
  std::string in, out, family, field, variant = "basis", cols;
  std::size_t k = 0, q = 0;
  std::uint64_t n = 0;
  std::optional<unsigned> embed_degree;
  std::optional<std::uint64_t> seed;
};

void cmd_truncate(const Options& o, std::ostream& out, std::ostream& err) {
  auto in = open_input(o.in);
  const MatrixFile file = read_matrix_file(in, o.field.empty() ? nullptr : parse_field(o.field));
  if (!file.matrix) fail(Errc::InvalidArgument, "truncate expects a matrix over F, not over F[X]");
  if (o.seed) {
    const FMatrix& m = *file.matrix;
    if (m.field()->is_finite() && m.field()->size() <= 10 * o.k * m.cols()) {
      err << "warning: randomized truncation over a small field is unreliable\n";
    }
    write_matrix(out, randomized_truncation(m, o.k, *o.seed), file.labels);
    return;
  }
  const TruncationResult t = truncate(*file.matrix, o.k);
  if (o.embed_degree) {
    write_finite_truncation(out, embed_finite(t, *o.embed_degree == 0 ? std::nullopt : o.embed_degree), file.labels);
  } else {
    write_truncation(out, t, file.labels);
  }
}

void cmd_independent(const Options& o, std::ostream& out) {
  auto in = open_input(o.in);
  const MatrixFile file = read_matrix_file(in, o.field.empty() ? nullptr : parse_field(o.field));
  const std::size_t cols = file.matrix ? file.matrix->cols() : file.poly->cols();
  const ColumnSet set = parse_columns(o.cols, effective_labels(file.labels, cols));
  const bool result = file.matrix ? independent_f(*file.matrix, set) : independent_columns_fx(*file.poly, set);
  out << (result ? "true" : "false") << '\n';
}

void cmd_repset(const Options& o, std::ostream& out) {
  auto in = open_input(o.in);
  const MatrixFile file = read_matrix_file(in, o.field.empty() ? nullptr : parse_field(o.field));
  if (!file.matrix) fail(Errc::InvalidArgument, "repset expects a matrix over F");
  const auto labels = effective_labels(file.labels, file.matrix->cols());
  auto fam_in = open_input(o.family);
  const SetFamily family = read_family(fam_in, labels);
  const SetFamily rep = o.variant == "spanning" ? repset_spanning(*file.matrix, family, o.q)
                                                : repset_basis(*file.matrix, family, o.q);
  write_family(out, rep, labels);
}

void print_field(std::ostream& out, const FieldPtr& f) {
  out << "field " << f->spec().to_string() << '\n';
  if (f->kind() == FieldKind::extension) {
    out << "modulus";
    for (std::uint64_t c : f->spec().modulus) out << ' ' << c;
    out << '\n';
  }
}

void cmd_field_info(const Options& o, std::ostream& out) {
  const FieldPtr f = parse_field(o.field);
  print_field(out, f);
  out << "characteristic " << f->characteristic() << '\n';
  if (!f->is_finite()) {
    out << "size infinite\n";
    return;
  }
  out << "degree " << f->degree() << '\n';
  out << "size " << f->size() << '\n';
  out << "primitive " << primitive_element(f).to_string() << '\n';
  if (o.n > 0) out << "element_of_order " << element_of_order(f, o.n).to_string() << '\n';
}

void cmd_embed(const Options& o, std::ostream& out) {
  const FieldPtr f = parse_field(o.field);
  const FieldExtension ext = extend_field(f, o.n);
  print_field(out, ext.field);
  out << "size " << ext.field->size() << '\n';
  out << "alpha " << ext.alpha.to_string() << '\n';
  if (f->kind() == FieldKind::extension) out << "generator_image " << ext.embedding.generator_image().to_string() << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deterministic matroid truncation and representative families"};
  app.require_subcommand(1);
  Options o;

  auto* trunc = app.add_subcommand("truncate", "Truncate a matrix to k rows over F[X]");
  trunc->add_option("--k", o.k, "Target rank k")->required();
  trunc->add_option("--in", o.in, "Matrix file")->required();
  trunc->add_option("--out", o.out, "Output file (default: stdout)");
  trunc->add_option("--field", o.field, "Read the entries over this field instead (Q, p or p^l)");
  trunc->add_option("--embed-degree", o.embed_degree,
                    "Embed the result into a degree-r extension of the working field (0 means r = nk)");
  trunc->add_option("--seed", o.seed, "Use the randomized truncation with this seed")->group("");

  auto* indep = app.add_subcommand("independent", "Test a column set for linear independence");
  indep->add_option("--in", o.in, "Matrix or PolyMatrix file")->required();
  indep->add_option("--cols", o.cols, "Comma-separated labels, or 1-based column indices")->required();
  indep->add_option("--field", o.field, "Read the entries over this field instead");
  indep->add_option("--out", o.out, "Output file (default: stdout)");

  auto* rep = app.add_subcommand("repset", "Compute a q-representative subfamily");
  rep->add_option("--in", o.in, "Matrix file")->required();
  rep->add_option("--family", o.family, "Family file")->required();
  rep->add_option("--q", o.q, "Size q of the extending sets")->required();
  rep->add_option("--variant", o.variant, "basis (size C(p+q,p)) or spanning (weight aware); default basis")
      ->check(CLI::IsMember({"basis", "spanning"}));
  rep->add_option("--field", o.field, "Read the entries over this field instead");
  rep->add_option("--out", o.out, "Output file (default: stdout)");

  auto* info = app.add_subcommand("field-info", "Describe a field");
  info->add_option("--field", o.field, "Q, p or p^l")->required();
  info->add_option("--order-above", o.n, "Also print element_of_order for this n");
  info->add_option("--out", o.out, "Output file (default: stdout)");

  auto* emb = app.add_subcommand("embed", "Extend a finite field beyond n elements");
  emb->add_option("--field", o.field, "p or p^l")->required();
  emb->add_option("--n", o.n, "Lower bound on the size")->required();
  emb->add_option("--out", o.out, "Output file (default: stdout)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "ERROR Usage: " << e.what() << '\n';
    return 2;
  }

  std::ostringstream buffer;
  try {
    if (*trunc) cmd_truncate(o, buffer, err);
    else if (*indep) cmd_independent(o, buffer);
    else if (*rep) cmd_repset(o, buffer);
    else if (*info) cmd_field_info(o, buffer);
    else cmd_embed(o, buffer);
  } catch (const UsageError& e) {
    err << "ERROR Usage: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "ERROR " << errc_name(e.code()) << ": " << e.what() << '\n';
    return e.code() == Errc::ParseError ? 2 : 1;
  }
  if (o.out.empty()) {
    out << buffer.str();
  } else {
    std::ofstream file(o.out);
    if (!(file << buffer.str())) {
      err << "ERROR Usage: cannot write '" << o.out << "'\n";
      return 2;
    }
  }
  return 0;
}

}  // namespace detrunc::cli
