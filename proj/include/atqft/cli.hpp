#pragma once

#include <cstdint>
#include <exception>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "atqft/homology.hpp"
#include "atqft/manifolds.hpp"
#include "atqft/tqft.hpp"

namespace atqft::cli {

enum class Command { kHomology, kLinkingForm, kCs, kBf, kCompare, kSweep };
enum class OutputFormat { kTable, kJson, kCsv };

enum ExitCode : int {
  kExitOk = 0,
  kExitParse = 2,
  kExitSingular = 3,
  kExitBudget = 4,
  kExitInternal = 5,
};

/// Inclusive range a..b.
struct LevelRange {
  std::int64_t first = 0;
  std::int64_t last = 0;
};

struct RunConfig {
  Command command = Command::kHomology;
  /// Catalog expression or "@file.json"; ignored when matrix_file is set.
  std::string manifold;
  std::optional<std::string> matrix_file;
  /// Chain complex JSON, homology command only.
  std::optional<std::string> complex_file;
  std::optional<std::int64_t> level;
  std::optional<LevelRange> levels;
  OutputFormat format = OutputFormat::kTable;
  std::uint64_t budget = kDefaultEnumerationBudget;
  int precision = 15;
};

/// S3 | S1xS2 | Poincare | L(p,q) | sum(A,B) | -A | @path.json
/// Throws ParseError (with position) or NotCoprimeError.
Manifold parse_manifold(std::string_view spec);

/// A single integer level. Throws ParseError.
std::int64_t parse_level(std::string_view text);

/// "a..b" or a single integer. Throws ParseError.
LevelRange parse_level_range(std::string_view text);

Command parse_command(std::string_view name);
OutputFormat parse_format(std::string_view name);

/// Runs one command, writing the report to `out` and diagnostics to `err`.
/// Returns an ExitCode value.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Exit code for an exception escaping a computation.
int exit_code_for(const std::exception& e);

}  // namespace atqft::cli
