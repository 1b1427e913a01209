#include "atqft/cli.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <vector>

#include "atqft/errors.hpp"
#include "atqft/json_io.hpp"

namespace atqft::cli {

namespace {

constexpr std::size_t kSymbolicTermLimit = 8;

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  Manifold parse() {
    Manifold m = spec();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return m;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("manifold spec '" + std::string(text_) + "': " + what, pos_);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a manifold name");
    return std::string(text_.substr(start, pos_ - start));
  }

  long long integer() {
    skip_space();
    long long value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) fail("expected an integer");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  Manifold spec() {
    if (peek('-')) {
      ++pos_;
      return spec().reversed();
    }
    if (peek('@')) {
      ++pos_;
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ',' && text_[pos_] != ')') ++pos_;
      std::string path(text_.substr(start, pos_ - start));
      while (!path.empty() && std::isspace(static_cast<unsigned char>(path.back()))) path.pop_back();
      if (path.empty()) fail("expected a file path after '@'");
      return Manifold(path, matrix_from_json(read_json_file(path)));
    }
    const std::size_t name_pos = (skip_space(), pos_);
    const std::string name = identifier();
    if (name == "S3") return sphere3();
    if (name == "S1xS2") return s1_x_s2();
    if (name == "Poincare") return poincare_sphere();
    if (name == "L") {
      expect('(');
      const long long p = integer();
      expect(',');
      const long long q = integer();
      expect(')');
      return lens_space(p, q);
    }
    if (name == "sum") {
      expect('(');
      Manifold a = spec();
      expect(',');
      Manifold b = spec();
      expect(')');
      return connected_sum(a, b);
    }
    pos_ = name_pos;
    fail("unknown manifold '" + name + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::int64_t parse_int(std::string_view text, std::size_t offset) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw ParseError("bad integer '" + std::string(text) + "'", offset);
  return value;
}

std::string format_double(double x, int precision) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", precision, x + 0.0);
  return buf;
}

std::string format_complex(const GaussianApprox& a, int precision) {
  std::string s = format_double(a.re, precision);
  s += a.im < 0 ? " - " : " + ";
  s += format_double(a.im < 0 ? -a.im : a.im, precision) + "i";
  return s;
}

std::string exact_or_numeric(const CyclotomicNumber& c, int precision) {
  if (c.term_count() <= kSymbolicTermLimit) return to_string(c);
  return format_complex(numeric(c, precision), precision) + " (" +
         std::to_string(c.term_count()) + " terms)";
}

// Integer if the value is one, else the real part.
std::string integer_or_real(const CyclotomicNumber& c, int precision) {
  if (auto n = c.as_integer()) return n->get_str();
  return format_double(numeric(c, precision).re, precision);
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string join(const std::vector<Integer>& xs, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < xs.size(); ++i) out += (i ? sep : "") + xs[i].get_str();
  return out;
}

std::string group_string(const AbelianGroup& g) {
  if (g.is_trivial()) return "0";
  std::vector<std::string> parts;
  if (g.free_rank() == 1) parts.push_back("Z");
  if (g.free_rank() > 1) parts.push_back("Z^" + std::to_string(g.free_rank()));
  for (const auto& p : g.torsion_orders()) parts.push_back("Z/" + p.get_str());
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? " + " : "") + parts[i];
  return out;
}

std::string matrix_string(const IntMatrix& m) {
  std::ostringstream os;
  os << m;
  return os.str();
}

void dump(std::ostream& os, const Json& j) { os << j.dump(2) << '\n'; }

TqftOptions options_for(const RunConfig& config) {
  TqftOptions o;
  o.budget = config.budget;
  o.precision = config.precision;
  return o;
}

Manifold resolve_manifold(const RunConfig& config) {
  if (config.matrix_file)
    return Manifold(*config.matrix_file, matrix_from_json(read_json_file(*config.matrix_file)));
  return parse_manifold(config.manifold);
}

void report_homology(const RunConfig& config, std::ostream& os) {
  if (config.complex_file) {
    const AbelianGroup g =
        homology_of_complex(chain_complex_from_json(read_json_file(*config.complex_file)), 1);
    switch (config.format) {
      case OutputFormat::kJson: {
        Json j = group_to_json(g);
        j["complex"] = *config.complex_file;
        dump(os, j);
        break;
      }
      case OutputFormat::kCsv:
        os << "complex,free_rank,torsion\n"
           << csv_field(*config.complex_file) << ',' << g.free_rank() << ','
           << join(g.torsion_orders(), ";") << '\n';
        break;
      case OutputFormat::kTable:
        os << "complex: " << *config.complex_file << "\nH_1: " << group_string(g) << '\n';
        break;
    }
    return;
  }
  const Manifold m = resolve_manifold(config);
  const AbelianGroup g = homology(m);
  switch (config.format) {
    case OutputFormat::kJson: {
      Json j = group_to_json(g);
      j["manifold"] = m.name();
      j["presentation"] = matrix_to_json(m.linking_matrix());
      dump(os, j);
      break;
    }
    case OutputFormat::kCsv:
      os << "manifold,free_rank,torsion\n"
         << csv_field(m.name()) << ',' << g.free_rank() << ',' << join(g.torsion_orders(), ";")
         << '\n';
      break;
    case OutputFormat::kTable:
      os << "manifold: " << m.name() << '\n'
         << "presentation: " << matrix_string(m.linking_matrix()) << '\n'
         << "H_1: " << group_string(g) << '\n'
         << "free rank: " << g.free_rank() << '\n'
         << "torsion: " << (g.torsion_orders().empty() ? "none" : join(g.torsion_orders(), " "))
         << '\n';
      break;
  }
}

void report_linking_form(const Manifold& m, const RunConfig& config, std::ostream& os) {
  const LinkingForm form = linking_form(m);
  switch (config.format) {
    case OutputFormat::kJson:
      dump(os, linking_form_to_json(form));
      break;
    case OutputFormat::kCsv:
      os << "i,j,q\n";
      for (std::size_t i = 0; i < form.size(); ++i)
        for (std::size_t j = 0; j < form.size(); ++j)
          os << i << ',' << j << ',' << form.q(i, j).to_string() << '\n';
      break;
    case OutputFormat::kTable:
      os << "manifold: " << m.name() << '\n'
         << "torsion: "
         << (form.size() == 0 ? "none" : join(form.group().torsion_orders(), " ")) << '\n';
      if (form.size() > 0) {
        os << "q:\n";
        for (const auto& row : form.matrix()) {
          os << ' ';
          for (const auto& x : row) os << ' ' << std::setw(8) << x.to_string();
          os << '\n';
        }
      }
      break;
  }
}

void report_partition(const Manifold& m, const PartitionResult& r, const RunConfig& config,
                      std::ostream& os) {
  switch (config.format) {
    case OutputFormat::kJson:
      dump(os, partition_to_json(r));
      break;
    case OutputFormat::kCsv:
      os << "theory,N,re,im,err,method\n"
         << to_string(r.theory) << ',' << r.level.value() << ','
         << format_double(r.numeric.re, config.precision) << ','
         << format_double(r.numeric.im, config.precision) << ','
         << format_double(r.numeric.err, 3) << ',' << to_string(r.method) << '\n';
      break;
    case OutputFormat::kTable:
      os << "Z_" << to_string(r.theory) << '(' << m.name() << ", N=" << r.level.value()
         << ") = " << exact_or_numeric(r.exact, config.precision) << '\n'
         << "  numeric: " << format_complex(r.numeric, config.precision)
         << "  (err <= " << format_double(r.numeric.err, 3) << ")\n"
         << "  torsion: "
         << (r.torsion.empty() ? "none" : join(r.torsion, " ")) << "  method: "
         << to_string(r.method) << '\n';
      break;
  }
}

struct SweepRow {
  std::int64_t level;
  PartitionResult cs;
  CyclotomicNumber abs_sq;
  PartitionResult bf;
  bool equal;
};

SweepRow sweep_row(const LinkingForm& form, std::int64_t n, const TqftOptions& options) {
  SweepRow row{n, z_cs(form, Level(n), options), {}, z_bf(form, Level(n), options), false};
  row.abs_sq = mul(row.cs.exact, row.cs.exact.conjugate()).reduced();
  row.equal = equals(row.abs_sq, row.bf.exact);
  return row;
}

void report_compare(const Manifold& m, const LinkingForm& form, std::int64_t n,
                    const RunConfig& config, std::ostream& os) {
  const CsBfComparison c = compare_cs_bf(form, Level(n), options_for(config));
  switch (config.format) {
    case OutputFormat::kJson: {
      Json torsion = Json::array();
      for (const auto& p : form.group().torsion_orders()) torsion.push_back(integer_to_json(p));
      dump(os, Json{{"level", n},
                    {"torsion", torsion},
                    {"abs_sq_cs", cyclotomic_to_json(c.abs_sq_cs)},
                    {"bf", cyclotomic_to_json(c.bf)},
                    {"equal", c.equal}});
      break;
    }
    case OutputFormat::kCsv:
      os << "N,absZ_CS_sq,Z_BF,equal\n"
         << n << ',' << integer_or_real(c.abs_sq_cs, config.precision) << ','
         << integer_or_real(c.bf, config.precision) << ',' << (c.equal ? "true" : "false") << '\n';
      break;
    case OutputFormat::kTable:
      os << "manifold: " << m.name() << "  N=" << n << '\n'
         << "|Z_CS|^2 = " << exact_or_numeric(c.abs_sq_cs, config.precision) << '\n'
         << "Z_BF     = " << exact_or_numeric(c.bf, config.precision) << '\n'
         << (c.equal ? "equal" : "NOT equal") << '\n';
      break;
  }
}

void report_sweep(const Manifold& m, const LinkingForm& form, LevelRange range,
                  const RunConfig& config, std::ostream& os) {
  const TqftOptions options = options_for(config);
  std::vector<SweepRow> rows;
  for (std::int64_t n = range.first; n <= range.last; ++n) rows.push_back(sweep_row(form, n, options));

  const int prec = config.precision;
  switch (config.format) {
    case OutputFormat::kCsv:
      os << "N,Z_CS_re,Z_CS_im,absZ_CS_sq,Z_BF,equal\n";
      for (const auto& r : rows)
        os << r.level << ',' << format_double(r.cs.numeric.re, prec) << ','
           << format_double(r.cs.numeric.im, prec) << ',' << integer_or_real(r.abs_sq, prec) << ','
           << integer_or_real(r.bf.exact, prec) << ',' << (r.equal ? "true" : "false") << '\n';
      break;
    case OutputFormat::kJson: {
      Json out_rows = Json::array();
      for (const auto& r : rows)
        out_rows.push_back(Json{{"N", r.level},
                                {"Z_CS", cyclotomic_to_json(r.cs.exact)},
                                {"Z_CS_numeric", numeric_to_json(r.cs.numeric)},
                                {"absZ_CS_sq", cyclotomic_to_json(r.abs_sq)},
                                {"Z_BF", cyclotomic_to_json(r.bf.exact)},
                                {"Z_BF_method", to_string(r.bf.method)},
                                {"equal", r.equal}});
      Json torsion = Json::array();
      for (const auto& p : form.group().torsion_orders()) torsion.push_back(integer_to_json(p));
      dump(os, Json{{"manifold", m.name()}, {"torsion", torsion}, {"rows", out_rows}});
      break;
    }
    case OutputFormat::kTable:
      os << "manifold: " << m.name() << '\n'
         << std::setw(6) << "N" << "  " << std::setw(24) << "Z_CS" << "  " << std::setw(10)
         << "|Z_CS|^2" << "  " << std::setw(10) << "Z_BF" << "  equal\n";
      for (const auto& r : rows)
        os << std::setw(6) << r.level << "  " << std::setw(24)
           << exact_or_numeric(r.cs.exact, prec) << "  " << std::setw(10)
           << integer_or_real(r.abs_sq, prec) << "  " << std::setw(10)
           << integer_or_real(r.bf.exact, prec) << "  " << (r.equal ? "yes" : "no") << '\n';
      break;
  }
}

void validate(const RunConfig& config) {
  if (config.budget < 1) throw InvalidArgumentError("--budget must be at least 1");
  if (config.precision < 1 || config.precision > 16)
    throw InvalidArgumentError("--precision must be between 1 and 16");
  const bool needs_level = config.command == Command::kCs || config.command == Command::kBf ||
                           config.command == Command::kCompare;
  if (needs_level && !config.level) throw InvalidArgumentError("this command needs --level");
  if (config.command == Command::kSweep && !config.levels)
    throw InvalidArgumentError("sweep needs --levels a..b");
  const bool has_source = config.matrix_file || !config.manifold.empty() ||
                          (config.command == Command::kHomology && config.complex_file);
  if (!has_source) throw InvalidArgumentError("no manifold given (--manifold or --matrix-file)");
}

}  // namespace

Manifold parse_manifold(std::string_view spec) { return SpecParser(spec).parse(); }

std::int64_t parse_level(std::string_view text) { return parse_int(text, 0); }

LevelRange parse_level_range(std::string_view text) {
  const std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    const std::int64_t n = parse_int(text, 0);
    return {n, n};
  }
  LevelRange r{parse_int(text.substr(0, dots), 0), parse_int(text.substr(dots + 2), dots + 2)};
  if (r.first > r.last) throw ParseError("empty level range '" + std::string(text) + "'", 0);
  return r;
}

Command parse_command(std::string_view name) {
  if (name == "homology") return Command::kHomology;
  if (name == "linking-form") return Command::kLinkingForm;
  if (name == "cs") return Command::kCs;
  if (name == "bf") return Command::kBf;
  if (name == "compare") return Command::kCompare;
  if (name == "sweep") return Command::kSweep;
  throw ParseError("unknown command '" + std::string(name) + "'");
}

OutputFormat parse_format(std::string_view name) {
  if (name == "table") return OutputFormat::kTable;
  if (name == "json") return OutputFormat::kJson;
  if (name == "csv") return OutputFormat::kCsv;
  throw ParseError("unknown format '" + std::string(name) + "'");
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const NotCoprimeError*>(&e) ||
      dynamic_cast<const InvalidArgumentError*>(&e) || dynamic_cast<const NonSquareError*>(&e) ||
      dynamic_cast<const NonSymmetricError*>(&e) ||
      dynamic_cast<const DimensionMismatchError*>(&e) ||
      dynamic_cast<const ComplexInvalidError*>(&e))
    return kExitParse;
  if (dynamic_cast<const SingularMatrixError*>(&e)) return kExitSingular;
  if (dynamic_cast<const BudgetExceededError*>(&e) || dynamic_cast<const OrderOverflowError*>(&e))
    return kExitBudget;
  return kExitInternal;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  std::ostringstream report;
  try {
    validate(config);
    if (config.command == Command::kHomology) {
      report_homology(config, report);
    } else {
      const Manifold m = resolve_manifold(config);
      const LinkingForm form = linking_form(m);
      switch (config.command) {
        case Command::kLinkingForm:
          report_linking_form(m, config, report);
          break;
        case Command::kCs:
          report_partition(m, z_cs(form, Level(*config.level), options_for(config)), config, report);
          break;
        case Command::kBf:
          report_partition(m, z_bf(form, Level(*config.level), options_for(config)), config, report);
          break;
        case Command::kCompare:
          report_compare(m, form, *config.level, config, report);
          break;
        case Command::kSweep:
          report_sweep(m, form, *config.levels, config, report);
          break;
        case Command::kHomology:
          break;
      }
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  out << report.str();
  return kExitOk;
}

}  // namespace atqft::cli
