#include "atqft/linking.hpp"


#include "atqft/errors.hpp"

namespace atqft {

ModOne::ModOne(long numerator, unsigned long denominator) {
  if (denominator == 0) throw InvalidArgumentError("zero denominator");
  Rational r{Integer(numerator), Integer(denominator)};
  r.canonicalize();
  value_ = mod_one(r);
}

std::string ModOne::to_string() const {
  if (value_.get_den() == 1) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

ModOne ModOne::parse(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0 || r.get_den() == 0)
    throw ParseError("not a fraction: '" + text + "'");
  r.canonicalize();
  return ModOne(r);
}

LinkingForm::LinkingForm(AbelianGroup group, std::vector<std::vector<ModOne>> q)
    : group_(std::move(group)), q_(std::move(q)) {
  const auto& orders = group_.torsion_orders();
  const std::size_t n = orders.size();
  if (q_.size() != n) throw DimensionMismatchError("form size differs from torsion rank");
  for (const auto& row : q_)
    if (row.size() != n) throw DimensionMismatchError("form matrix is not square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      if (!(q_[i][j] == q_[j][i])) throw NonSymmetricError("linking form is not symmetric");
      if (!(orders[i] * q_[i][j]).is_zero() || !(orders[j] * q_[i][j]).is_zero())
        throw InvalidArgumentError("linking form entry is not annihilated by the generator orders");
    }
}

LinkingForm LinkingForm::negated() const {
  auto q = q_;
  for (auto& row : q)
    for (auto& x : row) x = -x;
  return LinkingForm(group_, std::move(q));
}

LinkingForm linking_form_from_matrix(const IntMatrix& l) {
  if (!l.is_square()) throw NonSquareError("linking matrix must be square");
  if (!l.is_symmetric()) throw NonSymmetricError("linking matrix must be symmetric");
  const RationalMatrix inverse = rational_inverse(l);  // throws on det == 0

  const SnfDecomposition s = snf(l);
  const RationalMatrix w(unimodular_inverse(s.u));
  const RationalMatrix transported = w.transpose() * inverse * w;

  std::vector<std::size_t> torsion_index;
  std::vector<Integer> orders;
  const auto diag = s.diagonal();
  for (std::size_t i = 0; i < diag.size(); ++i)
    if (diag[i] > 1) {
      torsion_index.push_back(i);
      orders.push_back(diag[i]);
    }

  std::vector<std::vector<ModOne>> q(torsion_index.size(),
                                     std::vector<ModOne>(torsion_index.size()));
  for (std::size_t a = 0; a < torsion_index.size(); ++a)
    for (std::size_t b = 0; b < torsion_index.size(); ++b)
      q[a][b] = ModOne(-transported(torsion_index[a], torsion_index[b]));
  return LinkingForm(AbelianGroup(0, std::move(orders)), std::move(q));
}

RadicalSplit split_radical(const IntMatrix& l) {
  if (!l.is_square()) throw NonSquareError("linking matrix must be square");
  if (!l.is_symmetric()) throw NonSymmetricError("linking matrix must be symmetric");
  const SnfDecomposition s = snf(l);
  const std::size_t rank = s.rank();
  // The trailing columns of v span ker l, so v^T l v vanishes outside the
  // leading rank x rank block.
  const IntMatrix congruent = s.v.transpose() * l * s.v;
  return RadicalSplit{congruent.block(0, rank, 0, rank), l.rows() - rank};
}

LinkingForm linking_form_of_presentation(const IntMatrix& l) {
  RadicalSplit split = split_radical(l);
  LinkingForm torsion = linking_form_from_matrix(split.nondegenerate);
  return LinkingForm(AbelianGroup(split.free_rank, torsion.group().torsion_orders()),
                     torsion.matrix());
}

ModOne eval_q(const LinkingForm& form, const TorsionElement& a, const TorsionElement& b) {
  const std::size_t n = form.size();
  if (a.coefficients.size() != n || b.coefficients.size() != n)
    throw DimensionMismatchError("torsion element length differs from form size");
  Rational sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coefficients[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (b.coefficients[j] == 0) continue;
      sum += Rational(Integer(static_cast<long>(a.coefficients[i])) *
                      Integer(static_cast<long>(b.coefficients[j]))) *
             form.q(i, j).value();
    }
  }
  return ModOne(sum);
}

ModOne pairing_free_zero_mode(const FreeOriginVector& m, const ZeroModeVector& theta) {
  if (m.m.size() != theta.theta.size())
    throw DimensionMismatchError("free origin and zero mode lengths differ");
  Rational sum = 0;
  for (std::size_t a = 0; a < m.m.size(); ++a) sum += m.m[a] * theta.theta[a].value();
  return ModOne(sum);
}

ModOne pairing_free_free(const FreeOriginVector& m, const FreeOriginVector& n) {
  if (m.m.size() != n.m.size())
    throw DimensionMismatchError("free origin lengths differ");
  return ModOne();
}

IntegerForm to_integer_form(const LinkingForm& form, std::uint64_t budget) {
  IntegerForm out;
  out.radices = checked_radices(form.group(), budget);
  const std::size_t n = form.size();
  Integer order = 1;
  for (const auto& row : form.matrix())
    for (const auto& x : row) mpz_lcm(order.get_mpz_t(), order.get_mpz_t(), x.value().get_den_mpz_t());
  // Denominators divide the largest torsion order, which the budget bounds.
  out.order = order.get_si();
  out.numerators.reserve(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational scaled = form.q(i, j).value() * order;
      out.numerators.push_back(scaled.get_num().get_si());
    }
  return out;
}

}  // namespace atqft
