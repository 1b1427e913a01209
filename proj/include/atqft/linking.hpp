#pragma once

// The torsion linking form of a surgery presentation and the pairings
// between the free origins, zero modes and torsion origins.

#include <cstdint>
#include <string>
#include <vector>

#include "atqft/homology.hpp"
#include "atqft/intlinalg.hpp"

namespace atqft {

/// An element of Q/Z, stored as its representative in [0, 1).
class ModOne {
 public:
  ModOne() = default;
  explicit ModOne(const Rational& r) : value_(mod_one(r)) {}
  ModOne(long numerator, unsigned long denominator);

  const Rational& value() const { return value_; }
  bool is_zero() const { return sgn(value_) == 0; }
  /// "num/den", or "0" for zero.
  std::string to_string() const;
  /// Parses "num/den" or an integer.
  static ModOne parse(const std::string& text);

  ModOne operator-() const { return ModOne(-value_); }
  friend ModOne operator+(const ModOne& a, const ModOne& b) { return ModOne(a.value_ + b.value_); }
  friend ModOne operator-(const ModOne& a, const ModOne& b) { return ModOne(a.value_ - b.value_); }
  friend ModOne operator*(const Integer& k, const ModOne& a) { return ModOne(k * a.value_); }
  friend bool operator==(const ModOne& a, const ModOne& b) { return a.value_ == b.value_; }

 private:
  Rational value_;
};

/// Flat translation theta_b of the zero modes, one per free generator.
struct ZeroModeVector {
  std::vector<ModOne> theta;
};

/// Integer coefficients m^a of a free origin, one per free generator.
struct FreeOriginVector {
  std::vector<Integer> m;
};

/// Symmetric Q/Z-valued bilinear form on the torsion generators of a group.
class LinkingForm {
 public:
  LinkingForm() = default;
  /// Throws DimensionMismatchError, NonSymmetricError or InvalidArgumentError
  /// (entry not annihilated by the generator orders).
  LinkingForm(AbelianGroup group, std::vector<std::vector<ModOne>> q);

  const AbelianGroup& group() const { return group_; }
  std::size_t size() const { return q_.size(); }
  const ModOne& q(std::size_t i, std::size_t j) const { return q_[i][j]; }
  const std::vector<std::vector<ModOne>>& matrix() const { return q_; }

  /// Q(x, y) -> -Q(x, y): the form of the orientation-reversed manifold.
  LinkingForm negated() const;

  friend bool operator==(const LinkingForm&, const LinkingForm&) = default;

 private:
  AbelianGroup group_;
  std::vector<std::vector<ModOne>> q_;
};

/// Q = -(w^T l^{-1} w) mod 1 on the SNF torsion generators (columns of w,
/// where u l v = d and w = u^{-1}). Requires l square, symmetric, det != 0.
LinkingForm linking_form_from_matrix(const IntMatrix& l);

/// Unimodular congruence v^T l v = diag(nondegenerate, 0).
struct RadicalSplit {
  IntMatrix nondegenerate;
  std::size_t free_rank = 0;
};

RadicalSplit split_radical(const IntMatrix& l);

/// Splits off the radical first, so degenerate symmetric presentations are
/// accepted; the returned form's group carries the free rank.
LinkingForm linking_form_of_presentation(const IntMatrix& l);

ModOne eval_q(const LinkingForm& form, const TorsionElement& a, const TorsionElement& b);

/// m . theta mod 1.
ModOne pairing_free_zero_mode(const FreeOriginVector& m, const ZeroModeVector& theta);

/// Always zero: off-diagonal values are integral linking numbers and the
/// self-pairing is set to zero by convention.
ModOne pairing_free_free(const FreeOriginVector& m, const FreeOriginVector& n);

/// Integer encoding of a form: q_ij = numerators[i][j] / order.
struct IntegerForm {
  std::int64_t order = 1;
  std::vector<std::int64_t> radices;
  std::vector<std::int64_t> numerators;  // row-major, size() x size()

  std::size_t size() const { return radices.size(); }
  std::int64_t at(std::size_t i, std::size_t j) const { return numerators[i * size() + j]; }
};

IntegerForm to_integer_form(const LinkingForm& form, std::uint64_t budget);

}  // namespace atqft
