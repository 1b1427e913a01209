#include <gtest/gtest.h>

#include <random>

#include "atqft/errors.hpp"
#include "atqft/linking.hpp"
#include "atqft/manifolds.hpp"
#include "support.hpp"

using namespace atqft;
namespace t = atqft::testing;

namespace {

TorsionElement el(std::vector<std::int64_t> c) { return TorsionElement{std::move(c)}; }

// Forms from random presentations over every chain in 2..12 with order <= max.
std::vector<LinkingForm> sample_forms(std::uint64_t seed, long max_order) {
  std::mt19937_64 rng(seed);
  std::vector<LinkingForm> out;
  for (const auto& chain : t::torsion_chains(2, 12, 3, max_order))
    out.push_back(linking_form_from_matrix(t::random_presentation(rng, chain)));
  return out;
}

}  // namespace

TEST(ModOneValue, ParseAndPrint) {
  EXPECT_EQ(ModOne(-1, 3).to_string(), "2/3");
  EXPECT_EQ(ModOne(4, 2).to_string(), "0");
  EXPECT_EQ(ModOne::parse("5/4"), ModOne(1, 4));
  EXPECT_EQ(ModOne::parse("-3"), ModOne());
  EXPECT_THROW(ModOne::parse("x/2"), ParseError);
  EXPECT_THROW(ModOne(1, 0), InvalidArgumentError);
  EXPECT_EQ(ModOne(1, 3) + ModOne(2, 3), ModOne());
  EXPECT_EQ(Integer(5) * ModOne(1, 4), ModOne(1, 4));
}

TEST(LinkingForm, GoldenValues) {
  const LinkingForm two = linking_form_from_matrix(IntMatrix{{2}});
  EXPECT_EQ(two.group().torsion_orders(), std::vector<Integer>{2});
  EXPECT_EQ(two.q(0, 0), ModOne(1, 2));

  const LinkingForm three = linking_form_from_matrix(IntMatrix{{3}});
  EXPECT_EQ(three.q(0, 0), ModOne(2, 3));

  const LinkingForm six = linking_form_from_matrix(IntMatrix::diagonal({2, 3}));
  EXPECT_EQ(six.group().torsion_orders(), std::vector<Integer>{6});
  EXPECT_EQ(six.q(0, 0), ModOne(1, 6));

  const LinkingForm e8 = linking_form(poincare_sphere());
  EXPECT_EQ(e8.size(), 0u);
}

TEST(LinkingForm, EvalExamples) {
  const LinkingForm f = linking_form_from_matrix(IntMatrix{{5}});
  const ModOne q = f.q(0, 0);
  EXPECT_EQ(eval_q(f, el({0}), el({3})), ModOne());
  EXPECT_EQ(eval_q(f, el({2}), el({3})), Integer(6) * q);
  EXPECT_THROW(eval_q(f, el({1, 1}), el({1})), DimensionMismatchError);
}

TEST(LinkingForm, InputErrors) {
  EXPECT_THROW(linking_form_from_matrix(IntMatrix{{1, 2}, {2, 4}}), SingularMatrixError);
  EXPECT_THROW(linking_form_from_matrix(IntMatrix{{1, 2}, {3, 4}}), NonSymmetricError);
  EXPECT_THROW(linking_form_from_matrix(IntMatrix(2, 1)), NonSquareError);
  const AbelianGroup z2(0, {Integer(2)});
  EXPECT_THROW(LinkingForm(z2, {{ModOne(1, 3)}}), InvalidArgumentError);
  EXPECT_THROW(LinkingForm(z2, {}), DimensionMismatchError);
  const AbelianGroup z2z2(0, {Integer(2), Integer(2)});
  EXPECT_THROW(LinkingForm(z2z2, {{ModOne(), ModOne(1, 2)}, {ModOne(), ModOne()}}),
               NonSymmetricError);
}

TEST(LinkingForm, AgreesWithCosetEnumeration) {
  std::mt19937_64 rng(201);
  for (const auto& chain : t::torsion_chains(2, 12, 2, 60)) {
    const IntMatrix l = t::random_presentation(rng, chain);
    if (l.rows() > 3) continue;
    const LinkingForm form = linking_form_from_matrix(l);
    const t::CosetForm brute = t::brute_force_linking(l);
    std::vector<Rational> brute_pairs;
    for (const auto& [key, v] : brute.value) brute_pairs.push_back(v);
    EXPECT_EQ(t::sorted(brute_pairs), t::pair_values(form)) << l;
    std::vector<Rational> brute_diag;
    for (std::size_t a = 0; a < brute.reps.size(); ++a) brute_diag.push_back(brute.value.at({a, a}));
    EXPECT_EQ(t::sorted(brute_diag), t::diagonal_values(form)) << l;
  }
  const t::CosetForm diag23 = t::brute_force_linking(IntMatrix::diagonal({2, 3}));
  std::vector<Rational> values;
  for (std::size_t a = 0; a < diag23.reps.size(); ++a) values.push_back(diag23.value.at({a, a}));
  EXPECT_EQ(t::sorted(values),
            t::diagonal_values(linking_form_from_matrix(IntMatrix::diagonal({2, 3}))));
}

TEST(LinkingForm, SymmetricBilinearNondegenerate) {
  for (const LinkingForm& form : sample_forms(202, 200)) {
    const TorsionEnumerator all = torsion_elements(form.group());
    const auto& radices = all.radices();
    auto sum = [&](const TorsionElement& a, const TorsionElement& b) {
      TorsionElement s = a;
      for (std::size_t i = 0; i < radices.size(); ++i)
        s.coefficients[i] = (a.coefficients[i] + b.coefficients[i]) % radices[i];
      return s;
    };
    std::vector<TorsionElement> elems(all.begin(), all.end());
    std::mt19937_64 rng(radices.size() * 1000 + elems.size());
    for (int trial = 0; trial < 200; ++trial) {
      const auto& a = elems[rng() % elems.size()];
      const auto& b = elems[rng() % elems.size()];
      const auto& c = elems[rng() % elems.size()];
      EXPECT_EQ(eval_q(form, a, b), eval_q(form, b, a));
      EXPECT_EQ(eval_q(form, sum(a, b), c), eval_q(form, a, c) + eval_q(form, b, c));
    }
    for (std::size_t i = 0; i < radices.size(); ++i) {
      TorsionElement order_shift = elems[rng() % elems.size()];
      const TorsionElement b = elems[rng() % elems.size()];
      const ModOne before = eval_q(form, order_shift, b);
      order_shift.coefficients[i] += radices[i];
      EXPECT_EQ(eval_q(form, order_shift, b), before);
    }
    // Nondegenerate: only the identity pairs trivially with everything.
    for (const auto& a : elems) {
      bool all_zero = true;
      for (const auto& b : elems)
        if (!eval_q(form, a, b).is_zero()) {
          all_zero = false;
          break;
        }
      bool is_identity = true;
      for (auto k : a.coefficients) is_identity = is_identity && k == 0;
      EXPECT_EQ(all_zero, is_identity);
    }
  }
}

TEST(LinkingForm, PresentationInvariance) {
  std::mt19937_64 rng(203);
  for (const auto& chain : t::torsion_chains(2, 12, 3, 200)) {
    const IntMatrix l = t::random_presentation(rng, chain);
    const IntMatrix u = t::random_unimodular(rng, l.rows());
    const IntMatrix l2 = u.transpose() * l * u;
    const LinkingForm a = linking_form_from_matrix(l);
    const LinkingForm b = linking_form_from_matrix(l2);
    EXPECT_EQ(a.group(), b.group());
    EXPECT_EQ(t::diagonal_values(a), t::diagonal_values(b));
    // Stabilisation by a +-1 summand does not change the form.
    const LinkingForm c = linking_form_from_matrix(block_diagonal(l, IntMatrix{{-1}}));
    EXPECT_EQ(t::diagonal_values(a), t::diagonal_values(c));
  }
}

TEST(LinkingForm, NegatedIsOrientationReversal) {
  const Manifold m = lens_space(7, 3);
  EXPECT_EQ(linking_form(m.reversed()), linking_form(m).negated());
}

TEST(RadicalSplit, Degenerate) {
  const RadicalSplit s = split_radical(IntMatrix::diagonal({2, 0}));
  EXPECT_EQ(s.free_rank, 1u);
  EXPECT_EQ(s.nondegenerate, IntMatrix{{2}});

  const LinkingForm f = linking_form_of_presentation(IntMatrix{{0, 0}, {0, 3}});
  EXPECT_EQ(f.group(), AbelianGroup(1, {Integer(3)}));
  EXPECT_EQ(f.q(0, 0), ModOne(2, 3));

  const LinkingForm zero = linking_form_of_presentation(IntMatrix{{0}});
  EXPECT_EQ(zero.group(), AbelianGroup(1, {}));
  EXPECT_EQ(zero.size(), 0u);
}

TEST(RadicalSplit, RandomCongruence) {
  std::mt19937_64 rng(204);
  for (int trial = 0; trial < 50; ++trial) {
    const IntMatrix core = t::random_presentation(rng, {static_cast<long>(2 + rng() % 10)});
    const std::size_t zeros = 1 + rng() % 2;
    IntMatrix l = block_diagonal(core, IntMatrix(zeros, zeros));
    const IntMatrix u = t::random_unimodular(rng, l.rows());
    l = u.transpose() * l * u;
    const LinkingForm f = linking_form_of_presentation(l);
    EXPECT_EQ(f.group().free_rank(), zeros);
    EXPECT_EQ(t::diagonal_values(f), t::diagonal_values(linking_form_from_matrix(core)));
  }
}

TEST(Pairings, FreeAndZeroModes) {
  EXPECT_EQ(pairing_free_zero_mode({{Integer(2), Integer(-1)}}, {{ModOne(1, 3), ModOne(1, 4)}}),
            ModOne(5, 12));
  EXPECT_EQ(pairing_free_zero_mode({{Integer(3)}}, {{ModOne(1, 3)}}), ModOne());
  EXPECT_THROW(pairing_free_zero_mode({{Integer(1)}}, {}), DimensionMismatchError);
  EXPECT_EQ(pairing_free_free({{Integer(4)}}, {{Integer(7)}}), ModOne());
  EXPECT_THROW(pairing_free_free({{Integer(4)}}, {}), DimensionMismatchError);
}

TEST(IntegerFormEncoding, MatchesRationalForm) {
  for (const LinkingForm& form : sample_forms(205, 300)) {
    const IntegerForm enc = to_integer_form(form, kDefaultEnumerationBudget);
    ASSERT_EQ(enc.size(), form.size());
    for (std::size_t i = 0; i < enc.size(); ++i) {
      EXPECT_EQ(Integer(enc.radices[i]), form.group().torsion_orders()[i]);
      for (std::size_t j = 0; j < enc.size(); ++j)
        EXPECT_EQ(ModOne(static_cast<long>(enc.at(i, j)), static_cast<unsigned long>(enc.order)),
                  form.q(i, j));
    }
  }
}
