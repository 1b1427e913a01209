#pragma once

// Partition functions of U(1) Chern-Simons and BF theory at integer level N,
// as exact finite sums over the torsion of H^2(M; Z) weighted by the linking
// form:
//
//   Z_CS(N) = sum_t exp(-2 pi i N Q(t, t))
//   Z_BF(N) = sum_a sum_b exp(-2 pi i N Q(a, b)) = prod_i gcd(p_i, N) p_i

#include <cstdint>
#include <string>
#include <vector>

#include "atqft/cyclotomic.hpp"
#include "atqft/homology.hpp"
#include "atqft/linking.hpp"

namespace atqft {

/// The coupling constant. Only integral levels give a well-defined action.
class Level {
 public:
  constexpr explicit Level(std::int64_t n) : n_(n) {}
  constexpr std::int64_t value() const { return n_; }
  constexpr Level operator-() const { return Level(-n_); }
  friend constexpr bool operator==(Level, Level) = default;

 private:
  std::int64_t n_;
};

enum class Theory { kChernSimons, kBF };
enum class Method { kDirectSum, kClosedForm };
enum class Execution { kSerial, kParallel };

struct TqftOptions {
  /// Cap on summed terms: |T| for CS, |T|^2 for the BF double sum.
  std::uint64_t budget = kDefaultEnumerationBudget;
  /// Fall back to the gcd product when the BF double sum exceeds the budget.
  bool bf_closed_form_fallback = true;
  Execution execution = Execution::kParallel;
  int precision = 15;
};

struct PartitionResult {
  Theory theory = Theory::kChernSimons;
  Level level{0};
  std::vector<Integer> torsion;
  Method method = Method::kDirectSum;
  /// Reduced to the canonical cyclotomic basis.
  CyclotomicNumber exact;
  GaussianApprox numeric;
};

PartitionResult z_cs(const LinkingForm& form, Level level, const TqftOptions& options = {});
PartitionResult z_bf(const LinkingForm& form, Level level, const TqftOptions& options = {});

/// prod_i gcd(p_i, |N|) p_i, with gcd(p, 0) = p.
Integer z_bf_closed_form(const AbelianGroup& group, Level level);

struct CsBfComparison {
  CyclotomicNumber abs_sq_cs;
  CyclotomicNumber bf;
  bool equal = false;
};

/// |Z_CS|^2 (as Z_CS * conj(Z_CS)) against Z_BF, decided exactly.
CsBfComparison compare_cs_bf(const LinkingForm& form, Level level,
                             const TqftOptions& options = {});

std::string to_string(Theory theory);
std::string to_string(Method method);

}  // namespace atqft
