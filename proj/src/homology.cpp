#include "atqft/homology.hpp"

#include <algorithm>
#include <string>

#include "atqft/errors.hpp"

namespace atqft {

AbelianGroup::AbelianGroup(std::size_t free_rank, std::vector<Integer> torsion_orders)
    : free_rank_(free_rank), torsion_(std::move(torsion_orders)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2) throw InvalidArgumentError("torsion orders must be at least 2");
    if (i > 0 && !mpz_divisible_p(torsion_[i].get_mpz_t(), torsion_[i - 1].get_mpz_t()))
      throw InvalidArgumentError("torsion orders must form a divisibility chain");
  }
}

AbelianGroup AbelianGroup::from_diagonal(std::span<const Integer> diagonal,
                                         std::size_t extra_free) {
  std::size_t free_rank = extra_free;
  std::vector<Integer> nontrivial;
  for (const auto& x : diagonal) {
    if (sgn(x) == 0) {
      ++free_rank;
    } else if (abs(x) != 1) {
      nontrivial.push_back(abs(x));
    }
  }
  // Re-diagonalize so the torsion lands in invariant-factor form.
  const bool chained = std::is_sorted(nontrivial.begin(), nontrivial.end()) &&
                       std::adjacent_find(nontrivial.begin(), nontrivial.end(),
                                          [](const Integer& a, const Integer& b) {
                                            return !mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t());
                                          }) == nontrivial.end();
  if (!chained) {
    SnfDecomposition s = snf(IntMatrix::diagonal(std::span<const Integer>(nontrivial)));
    nontrivial.clear();
    for (const auto& x : s.diagonal())
      if (x > 1) nontrivial.push_back(x);
  }
  return AbelianGroup(free_rank, std::move(nontrivial));
}

Integer AbelianGroup::torsion_order() const {
  Integer n = 1;
  for (const auto& p : torsion_) n *= p;
  return n;
}

AbelianGroup direct_sum(const AbelianGroup& a, const AbelianGroup& b) {
  std::vector<Integer> all = a.torsion_orders();
  all.insert(all.end(), b.torsion_orders().begin(), b.torsion_orders().end());
  return AbelianGroup::from_diagonal(all, a.free_rank() + b.free_rank());
}

AbelianGroup cokernel(const IntMatrix& m) {
  SnfDecomposition s = snf(m);
  auto diag = s.diagonal();
  // Generators beyond min(rows, cols) are unconstrained.
  const std::size_t unconstrained = m.rows() - diag.size();
  return AbelianGroup::from_diagonal(diag, unconstrained);
}

AbelianGroup group_from_presentation(const IntMatrix& l, SymmetryCheck check) {
  if (!l.is_square()) throw NonSquareError("surgery presentation must be square");
  if (check == SymmetryCheck::kRequire && !l.is_symmetric())
    throw NonSymmetricError("surgery presentation must be symmetric");
  return cokernel(l);
}

void validate(const ChainComplex& c) {
  if (c.d3.rows() != c.d2.cols())
    throw ComplexInvalidError("d3 target does not match d2 source");
  if (c.d2.rows() != c.d1.cols())
    throw ComplexInvalidError("d2 target does not match d1 source");
  if (!(c.d2 * c.d3).is_zero()) throw ComplexInvalidError("d2 * d3 != 0");
  if (!(c.d1 * c.d2).is_zero()) throw ComplexInvalidError("d1 * d2 != 0");
}

AbelianGroup homology_of_complex(const ChainComplex& c, int degree) {
  if (degree != 1) throw InvalidArgumentError("only degree 1 homology is supported");
  validate(c);
  const std::size_t n1 = c.d1.cols();
  // Columns rank..n1 of v form a basis of ker d1; v^{-1} d2 vanishes in the
  // first `rank` rows because d1 d2 = 0, and the remaining rows present
  // im d2 inside ker d1.
  SnfDecomposition s = snf(c.d1);
  const std::size_t rank = s.rank();
  IntMatrix coords = unimodular_inverse(s.v) * c.d2;
  IntMatrix presentation = coords.block(rank, n1, 0, coords.cols());
  return cokernel(presentation);
}

std::vector<std::int64_t> checked_radices(const AbelianGroup& g, std::uint64_t budget) {
  std::vector<std::int64_t> radices;
  Integer total = 1;
  for (const auto& p : g.torsion_orders()) {
    total *= p;
    if (total > Integer(std::to_string(budget)))
      throw BudgetExceededError("torsion subgroup has more than " + std::to_string(budget) +
                                " elements");
    radices.push_back(p.get_si());
  }
  return radices;
}

TorsionEnumerator::TorsionEnumerator(const AbelianGroup& g, std::uint64_t budget)
    : radices_(checked_radices(g, budget)) {
  for (auto p : radices_) size_ *= static_cast<std::uint64_t>(p);
}

TorsionEnumerator::iterator::iterator(const std::vector<std::int64_t>* radices,
                                      std::uint64_t index)
    : radices_(radices), index_(index) {
  current_.coefficients.assign(radices->size(), 0);
}

TorsionEnumerator::iterator& TorsionEnumerator::iterator::operator++() {
  ++index_;
  auto& c = current_.coefficients;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (++c[i] < (*radices_)[i]) break;
    c[i] = 0;
  }
  return *this;
}

}  // namespace atqft
