// atqft: homology, linking forms and abelian Chern-Simons / BF partition
// functions of surgery-presented 3-manifolds.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "atqft/cli.hpp"
#include "atqft/errors.hpp"

namespace {

constexpr const char* kFooter = R"(Manifolds:
  S3, S1xS2, Poincare, L(p,q), sum(A,B), -A (reversed orientation),
  @file.json (matrix {"rows": r, "cols": c, "entries": [[...]]})

Levels: --level N, or --levels a..b (inclusive; use --levels=-3..3 for a
negative start). At N = 0 the BF closed form uses gcd(p, 0) = p.

Exit codes:
  0  success
  2  parse or input error (bad manifold expression, matrix JSON, non-coprime L(p,q), ...)
  3  singular matrix
  4  enumeration budget or root-of-unity order cap exceeded
  5  internal error)";

}  // namespace

int main(int argc, char** argv) {
  using namespace atqft::cli;

  CLI::App app{"Exact abelian Chern-Simons and BF partition functions of 3-manifolds", "atqft"};
  app.footer(kFooter);

  std::string command;
  std::string level_text;
  std::string levels_text;
  std::string format = "table";
  RunConfig config;

  app.add_option("command", command, "homology | linking-form | cs | bf | compare | sweep")
      ->required()
      ->check(CLI::IsMember({"homology", "linking-form", "cs", "bf", "compare", "sweep"}));
  app.add_option("--manifold,-m", config.manifold, "Manifold expression");
  auto* matrix_opt = app.add_option("--matrix-file", "Surgery matrix JSON file");
  auto* complex_opt = app.add_option("--complex-file", "Chain complex JSON file (homology only)");
  app.add_option("--level,-N", level_text, "Level N");
  app.add_option("--levels", levels_text, "Inclusive level range a..b (sweep)");
  app.add_option("--format,-f", format, "Output format")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--budget", config.budget, "Maximum number of summed terms")
      ->check(CLI::PositiveNumber);
  app.add_option("--precision", config.precision, "Decimal digits for numeric output (1-16)")
      ->check(CLI::Range(1, 16));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    config.command = parse_command(command);
    config.format = parse_format(format);
    if (*matrix_opt) config.matrix_file = matrix_opt->as<std::string>();
    if (*complex_opt) config.complex_file = complex_opt->as<std::string>();
    if (!level_text.empty()) config.level = parse_level(level_text);
    if (!levels_text.empty()) config.levels = parse_level_range(levels_text);
  } catch (const atqft::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
  return run(config, std::cout, std::cerr);
}
