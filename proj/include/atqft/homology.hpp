#pragma once

#include <cstddef>
#include <cstdint>
#include <iterator>
#include <vector>

#include "atqft/intlinalg.hpp"

namespace atqft {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

/// Finitely generated abelian group Z^free_rank + Z/p1 + ... + Z/pn, with the
/// torsion orders in invariant-factor form (each >= 2, p_i | p_{i+1}).
class AbelianGroup {
 public:
  AbelianGroup() = default;
  /// Validates the divisibility chain; throws InvalidArgumentError.
  AbelianGroup(std::size_t free_rank, std::vector<Integer> torsion_orders);

  /// Builds the canonical form from arbitrary diagonal entries of a
  /// presentation: units dropped, zeros counted as free generators, the rest
  /// rearranged into invariant factors.
  static AbelianGroup from_diagonal(std::span<const Integer> diagonal, std::size_t extra_free = 0);

  std::size_t free_rank() const { return free_rank_; }
  const std::vector<Integer>& torsion_orders() const { return torsion_; }
  bool is_trivial() const { return free_rank_ == 0 && torsion_.empty(); }
  bool is_finite() const { return free_rank_ == 0; }
  /// Product of the torsion orders (1 for no torsion).
  Integer torsion_order() const;

  friend bool operator==(const AbelianGroup&, const AbelianGroup&) = default;

 private:
  std::size_t free_rank_ = 0;
  std::vector<Integer> torsion_;
};

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b);

/// Residues kappa_i in [0, p_i), one per torsion order.
struct TorsionElement {
  std::vector<std::int64_t> coefficients;
  friend bool operator==(const TorsionElement&, const TorsionElement&) = default;
};

/// Boundary maps d3: C3 -> C2, d2: C2 -> C1, d1: C1 -> C0 as matrices acting
/// on column vectors.
struct ChainComplex {
  IntMatrix d3;
  IntMatrix d2;
  IntMatrix d1;
};

/// Throws ComplexInvalidError when shapes do not chain or d o d != 0.
void validate(const ChainComplex& c);

/// Z^rows / im(m) for any integer matrix.
AbelianGroup cokernel(const IntMatrix& m);

enum class SymmetryCheck { kRequire, kIgnore };

/// coker(l) for a square surgery matrix: H_1 of the surgered manifold.
AbelianGroup group_from_presentation(const IntMatrix& l,
                                     SymmetryCheck check = SymmetryCheck::kRequire);

/// H_degree of the complex. Only degree 1 is supported.
AbelianGroup homology_of_complex(const ChainComplex& c, int degree = 1);

/// Lexicographic cursor over the torsion subgroup, trivial element first.
class TorsionEnumerator {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = TorsionElement;
    using difference_type = std::ptrdiff_t;
    using pointer = const TorsionElement*;
    using reference = const TorsionElement&;

    iterator() = default;
    reference operator*() const { return current_; }
    pointer operator->() const { return &current_; }
    iterator& operator++();
    iterator operator++(int) {
      iterator old = *this;
      ++*this;
      return old;
    }
    friend bool operator==(const iterator& a, const iterator& b) {
      return a.index_ == b.index_;
    }

   private:
    friend class TorsionEnumerator;
    iterator(const std::vector<std::int64_t>* radices, std::uint64_t index);

    const std::vector<std::int64_t>* radices_ = nullptr;
    std::uint64_t index_ = 0;
    TorsionElement current_;
  };

  /// Throws BudgetExceededError when the torsion order exceeds the budget.
  explicit TorsionEnumerator(const AbelianGroup& g,
                             std::uint64_t budget = kDefaultEnumerationBudget);

  std::uint64_t size() const { return size_; }
  const std::vector<std::int64_t>& radices() const { return radices_; }
  iterator begin() const { return iterator(&radices_, 0); }
  iterator end() const { return iterator(&radices_, size_); }

 private:
  std::vector<std::int64_t> radices_;
  std::uint64_t size_ = 1;
};

inline TorsionEnumerator torsion_elements(const AbelianGroup& g,
                                          std::uint64_t budget = kDefaultEnumerationBudget) {
  return TorsionEnumerator(g, budget);
}

/// Torsion orders as machine integers; throws BudgetExceededError if the
/// group order exceeds the budget.
std::vector<std::int64_t> checked_radices(const AbelianGroup& g, std::uint64_t budget);

}  // namespace atqft
