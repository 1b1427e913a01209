#pragma once

// Exact sums of roots of unity, stored in the group ring Z[Z/m]. Values are
// compared by reducing modulo the m-th cyclotomic polynomial on demand.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "atqft/intlinalg.hpp"
#include "atqft/linking.hpp"

namespace atqft {

inline constexpr std::int64_t kDefaultOrderCap = 1'000'000;

/// Floating view of an exact value: |exact - (re, im)| <= err.
struct GaussianApprox {
  double re = 0.0;
  double im = 0.0;
  double err = 0.0;
};

class CyclotomicNumber {
 public:
  /// Zero.
  CyclotomicNumber() = default;
  CyclotomicNumber(const Integer& constant);  // NOLINT: integers embed implicitly
  CyclotomicNumber(long constant) : CyclotomicNumber(Integer(constant)) {}  // NOLINT
  /// sum_k coeffs[k] * zeta_order^k; exponents are reduced mod order.
  CyclotomicNumber(std::int64_t order, const std::map<std::int64_t, Integer>& coeffs);

  /// zeta_order^exponent.
  static CyclotomicNumber root(std::int64_t order, std::int64_t exponent);

  std::int64_t order() const { return order_; }
  const std::map<std::int64_t, Integer>& coeffs() const { return coeffs_; }
  std::size_t term_count() const { return coeffs_.size(); }
  /// Coefficient of zeta^k in this representation (not a value invariant).
  Integer coefficient(std::int64_t k) const;

  /// Same value written over zeta_m; m must be a multiple of order().
  CyclotomicNumber embedded(std::int64_t m) const;
  CyclotomicNumber conjugate() const;
  /// Canonical representative: remainder modulo the order's cyclotomic
  /// polynomial, i.e. coordinates in the basis zeta^0 .. zeta^(phi(m)-1).
  /// A rational integer comes back with order 1.
  CyclotomicNumber reduced() const;
  /// The value as a rational integer, if it is one.
  std::optional<Integer> as_integer() const;
  bool is_zero() const;
  /// Sum of |c_k| over the stored representation.
  Integer l1_norm() const;

  CyclotomicNumber operator-() const;

 private:
  std::int64_t order_ = 1;
  std::map<std::int64_t, Integer> coeffs_;
};

CyclotomicNumber add(const CyclotomicNumber& a, const CyclotomicNumber& b,
                     std::int64_t order_cap = kDefaultOrderCap);
CyclotomicNumber mul(const CyclotomicNumber& a, const CyclotomicNumber& b,
                     std::int64_t order_cap = kDefaultOrderCap);
inline CyclotomicNumber conjugate(const CyclotomicNumber& a) { return a.conjugate(); }
/// Exact equality of the represented complex numbers.
bool equals(const CyclotomicNumber& a, const CyclotomicNumber& b,
            std::int64_t order_cap = kDefaultOrderCap);

inline CyclotomicNumber operator+(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return add(a, b);
}
inline CyclotomicNumber operator-(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return add(a, -b);
}
inline CyclotomicNumber operator*(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return mul(a, b);
}
inline bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b) {
  return equals(a, b);
}

/// e^{2 pi i scale q} as a root of unity of order denominator(scale q mod 1).
/// Callers negate the argument for the e^{-2 pi i (...)} convention.
CyclotomicNumber root_term(const ModOne& q, const Integer& scale);

/// precision is a decimal digit count in [1, 16]; err never exceeds
/// 10^(1 - precision) * l1_norm().
GaussianApprox numeric(const CyclotomicNumber& a, int precision = 15);

/// Coefficients of the m-th cyclotomic polynomial, constant term first.
const std::vector<Integer>& cyclotomic_polynomial(std::int64_t m);

/// Human-readable form, e.g. "1 + 2*z3^2"; "0" for zero.
std::string to_string(const CyclotomicNumber& a);

}  // namespace atqft
