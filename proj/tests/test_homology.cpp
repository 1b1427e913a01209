#include <gtest/gtest.h>

#include <random>
#include <set>

#include "atqft/errors.hpp"
#include "atqft/homology.hpp"
#include "atqft/manifolds.hpp"
#include "support.hpp"

using namespace atqft;
using atqft::testing::cofactor_det;
using atqft::testing::random_matrix;
using atqft::testing::random_unimodular;

namespace {

AbelianGroup group(std::size_t free_rank, std::vector<long> torsion) {
  std::vector<Integer> t(torsion.begin(), torsion.end());
  return AbelianGroup(free_rank, t);
}

IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, long bound) {
  IntMatrix m = random_matrix(rng, n, n, bound);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) m(i, j) = m(j, i);
  return m;
}

}  // namespace

TEST(AbelianGroup, Validation) {
  EXPECT_NO_THROW(group(0, {2, 4, 12}));
  EXPECT_THROW(group(0, {1}), InvalidArgumentError);
  EXPECT_THROW(group(0, {4, 6}), InvalidArgumentError);
  EXPECT_EQ(group(1, {2, 6}).torsion_order(), 12);
  EXPECT_EQ(AbelianGroup().torsion_order(), 1);
  EXPECT_TRUE(AbelianGroup().is_trivial());
}

TEST(AbelianGroup, FromDiagonal) {
  const std::vector<Integer> a{2, 3};
  EXPECT_EQ(AbelianGroup::from_diagonal(a), group(0, {6}));
  const std::vector<Integer> b{4, 6};
  EXPECT_EQ(AbelianGroup::from_diagonal(b), group(0, {2, 12}));
  const std::vector<Integer> c{1, 0, -2, 2};
  EXPECT_EQ(AbelianGroup::from_diagonal(c, 1), group(2, {2, 2}));
}

TEST(AbelianGroup, DirectSum) {
  EXPECT_EQ(direct_sum(group(0, {2}), group(1, {3})), group(1, {6}));
  EXPECT_EQ(direct_sum(group(0, {2}), group(0, {2})), group(0, {2, 2}));
}

TEST(Presentation, Examples) {
  EXPECT_EQ(group_from_presentation(IntMatrix{{0}}), group(1, {}));
  EXPECT_EQ(group_from_presentation(IntMatrix{{5}}), group(0, {5}));
  EXPECT_EQ(group_from_presentation(IntMatrix{{-5}}), group(0, {5}));
  EXPECT_EQ(group_from_presentation(IntMatrix{{1}}), group(0, {}));
  EXPECT_EQ(group_from_presentation(IntMatrix()), group(0, {}));
  EXPECT_EQ(group_from_presentation(IntMatrix::diagonal({2, 0})), group(1, {2}));
  EXPECT_EQ(group_from_presentation(IntMatrix::diagonal({2, 3})), group(0, {6}));
  EXPECT_TRUE(group_from_presentation(poincare_sphere().presentation()).is_trivial());
}

TEST(Presentation, InputErrors) {
  EXPECT_THROW(group_from_presentation(IntMatrix(1, 2)), NonSquareError);
  EXPECT_THROW(group_from_presentation(IntMatrix{{1, 2}, {3, 4}}), NonSymmetricError);
  EXPECT_EQ(group_from_presentation(IntMatrix{{1, 2}, {3, 4}}, SymmetryCheck::kIgnore),
            group(0, {2}));
}

TEST(Presentation, OrderMatchesDeterminant) {
  std::mt19937_64 rng(101);
  for (int trial = 0; trial < 200; ++trial) {
    const IntMatrix l = random_symmetric(rng, 1 + rng() % 4, 6);
    const Integer d = cofactor_det(l);
    const AbelianGroup g = group_from_presentation(l);
    if (d == 0) {
      EXPECT_GT(g.free_rank(), 0u);
    } else {
      EXPECT_EQ(g.free_rank(), 0u);
      EXPECT_EQ(g.torsion_order(), abs(d)) << l;
    }
  }
}

TEST(Presentation, CongruenceInvariance) {
  std::mt19937_64 rng(102);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 4;
    const IntMatrix l = random_symmetric(rng, n, 5);
    const IntMatrix u = random_unimodular(rng, n);
    EXPECT_EQ(group_from_presentation(u.transpose() * l * u), group_from_presentation(l));
  }
}

TEST(Presentation, BlockSumIsDirectSum) {
  std::mt19937_64 rng(103);
  for (int trial = 0; trial < 100; ++trial) {
    const IntMatrix a = random_symmetric(rng, 1 + rng() % 3, 5);
    const IntMatrix b = random_symmetric(rng, 1 + rng() % 3, 5);
    EXPECT_EQ(group_from_presentation(block_diagonal(a, b)),
              direct_sum(group_from_presentation(a), group_from_presentation(b)));
  }
}

TEST(Cokernel, Rectangular) {
  EXPECT_EQ(cokernel(IntMatrix(2, 0)), group(2, {}));
  EXPECT_EQ(cokernel(IntMatrix{{2}, {0}}), group(1, {2}));
  EXPECT_EQ(cokernel(IntMatrix{{2, 4}}), group(0, {2}));
}

TEST(ChainComplex, Examples) {
  // Torus: one 0-cell, two 1-cells, one 2-cell, all boundaries zero.
  ChainComplex torus{IntMatrix(1, 0), IntMatrix(2, 1), IntMatrix(1, 2)};
  EXPECT_EQ(homology_of_complex(torus), group(2, {}));
  // Klein bottle: d2 = (2, 0)^T.
  ChainComplex klein{IntMatrix(1, 0), IntMatrix{{2}, {0}}, IntMatrix(1, 2)};
  EXPECT_EQ(homology_of_complex(klein), group(1, {2}));
  // Projective plane.
  ChainComplex rp2{IntMatrix(1, 0), IntMatrix{{2}}, IntMatrix(1, 1)};
  EXPECT_EQ(homology_of_complex(rp2), group(0, {2}));
  // Circle with a nontrivial d1 on an interval pair: 0-cells a, b; 1-cells e, f.
  ChainComplex circle{IntMatrix(0, 0), IntMatrix(2, 0), IntMatrix{{-1, -1}, {1, 1}}};
  EXPECT_EQ(homology_of_complex(circle), group(1, {}));
  // S1 x S2 minimal complex.
  ChainComplex s1s2{IntMatrix{{0}}, IntMatrix{{0}}, IntMatrix{{0}}};
  EXPECT_EQ(homology_of_complex(s1s2), group(1, {}));
  // Lens space: d2 = [p].
  ChainComplex lens{IntMatrix{{0}}, IntMatrix{{7}}, IntMatrix{{0}}};
  EXPECT_EQ(homology_of_complex(lens), group(0, {7}));
}

TEST(ChainComplex, BoundaryInsideNontrivialKernel) {
  // C1 = Z^3, d1 = (1, -1, 0) so ker d1 = <(1,1,0), (0,0,1)>; d2 hits 3*(1,1,0).
  ChainComplex c{IntMatrix(1, 0), IntMatrix{{3}, {3}, {0}}, IntMatrix{{1, -1, 0}}};
  EXPECT_EQ(homology_of_complex(c), group(1, {3}));
}

TEST(ChainComplex, Invalid) {
  ChainComplex bad_shape{IntMatrix(1, 0), IntMatrix(3, 1), IntMatrix(1, 2)};
  EXPECT_THROW(homology_of_complex(bad_shape), ComplexInvalidError);
  ChainComplex not_closed{IntMatrix(1, 0), IntMatrix{{1}}, IntMatrix{{1}}};
  EXPECT_THROW(homology_of_complex(not_closed), ComplexInvalidError);
  ChainComplex ok{IntMatrix(1, 0), IntMatrix{{2}}, IntMatrix(1, 1)};
  EXPECT_THROW(homology_of_complex(ok, 2), InvalidArgumentError);
}

TEST(TorsionEnumeration, Examples) {
  const auto trivial = torsion_elements(AbelianGroup());
  EXPECT_EQ(trivial.size(), 1u);
  EXPECT_TRUE(trivial.begin()->coefficients.empty());

  std::vector<TorsionElement> z2;
  for (const auto& t : torsion_elements(group(0, {2}))) z2.push_back(t);
  EXPECT_EQ(z2, (std::vector<TorsionElement>{{{0}}, {{1}}}));

  std::vector<std::vector<std::int64_t>> z2z4;
  for (const auto& t : torsion_elements(group(3, {2, 4}))) z2z4.push_back(t.coefficients);
  ASSERT_EQ(z2z4.size(), 8u);
  EXPECT_EQ(z2z4[0], (std::vector<std::int64_t>{0, 0}));
  EXPECT_EQ(z2z4[1], (std::vector<std::int64_t>{0, 1}));
  EXPECT_EQ(z2z4[4], (std::vector<std::int64_t>{1, 0}));
  EXPECT_EQ(z2z4[7], (std::vector<std::int64_t>{1, 3}));
}

TEST(TorsionEnumeration, ExhaustiveAndDistinct) {
  for (const auto& chain : atqft::testing::torsion_chains(2, 12, 3, 2000)) {
    std::vector<Integer> t(chain.begin(), chain.end());
    const AbelianGroup g(0, t);
    std::set<std::vector<std::int64_t>> seen;
    for (const auto& e : torsion_elements(g)) {
      for (std::size_t i = 0; i < chain.size(); ++i) {
        EXPECT_GE(e.coefficients[i], 0);
        EXPECT_LT(e.coefficients[i], chain[i]);
      }
      seen.insert(e.coefficients);
    }
    EXPECT_EQ(Integer(seen.size()), g.torsion_order());
  }
}

TEST(TorsionEnumeration, Budget) {
  EXPECT_THROW(torsion_elements(group(0, {10, 100}), 999), BudgetExceededError);
  EXPECT_NO_THROW(torsion_elements(group(0, {10, 100}), 1000));
  std::vector<Integer> huge{Integer("1000000000000000000000")};
  EXPECT_THROW(torsion_elements(AbelianGroup(0, huge)), BudgetExceededError);
}
