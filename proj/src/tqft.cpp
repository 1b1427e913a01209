#include "atqft/tqft.hpp"

#include "atqft/errors.hpp"
#include "atqft/kernels.hpp"

namespace atqft {

namespace {

CyclotomicNumber from_histogram(const kernels::PhaseHistogram& h, std::int64_t order) {
  std::map<std::int64_t, Integer> coeffs;
  for (std::size_t k = 0; k < h.size(); ++k)
    if (h[k] != 0) coeffs.emplace(static_cast<std::int64_t>(k), Integer(static_cast<unsigned long>(h[k])));
  return CyclotomicNumber(order, coeffs);
}

PartitionResult make_result(Theory theory, const LinkingForm& form, Level level, Method method,
                            CyclotomicNumber exact, int precision) {
  PartitionResult r;
  r.theory = theory;
  r.level = level;
  r.torsion = form.group().torsion_orders();
  r.method = method;
  r.exact = exact.reduced();
  r.numeric = numeric(r.exact, precision);
  return r;
}

}  // namespace

PartitionResult z_cs(const LinkingForm& form, Level level, const TqftOptions& options) {
  const IntegerForm integer_form = to_integer_form(form, options.budget);
  const auto h = options.execution == Execution::kParallel
                     ? kernels::cs_phases_parallel(integer_form, level.value())
                     : kernels::cs_phases_serial(integer_form, level.value());
  return make_result(Theory::kChernSimons, form, level, Method::kDirectSum,
                     from_histogram(h, integer_form.order), options.precision);
}

PartitionResult z_bf(const LinkingForm& form, Level level, const TqftOptions& options) {
  const Integer size = form.group().torsion_order();
  if (size * size > Integer(static_cast<unsigned long>(options.budget))) {
    if (!options.bf_closed_form_fallback)
      throw BudgetExceededError("BF double sum has " + Integer(size * size).get_str() +
                                " terms, more than the budget of " +
                                std::to_string(options.budget));
    return make_result(Theory::kBF, form, level, Method::kClosedForm,
                       CyclotomicNumber(z_bf_closed_form(form.group(), level)), options.precision);
  }
  const IntegerForm integer_form = to_integer_form(form, options.budget);
  const auto h = options.execution == Execution::kParallel
                     ? kernels::bf_phases_parallel(integer_form, level.value())
                     : kernels::bf_phases_serial(integer_form, level.value());
  return make_result(Theory::kBF, form, level, Method::kDirectSum,
                     from_histogram(h, integer_form.order), options.precision);
}

Integer z_bf_closed_form(const AbelianGroup& group, Level level) {
  const Integer n = abs(Integer(static_cast<long>(level.value())));
  Integer result = 1;
  for (const auto& p : group.torsion_orders()) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), n.get_mpz_t());  // gcd(p, 0) = p
    result *= g * p;
  }
  return result;
}

CsBfComparison compare_cs_bf(const LinkingForm& form, Level level, const TqftOptions& options) {
  const PartitionResult cs = z_cs(form, level, options);
  const PartitionResult bf = z_bf(form, level, options);
  CsBfComparison out;
  out.abs_sq_cs = mul(cs.exact, cs.exact.conjugate()).reduced();
  out.bf = bf.exact;
  out.equal = equals(out.abs_sq_cs, out.bf);
  return out;
}

std::string to_string(Theory theory) { return theory == Theory::kChernSimons ? "CS" : "BF"; }

std::string to_string(Method method) {
  return method == Method::kDirectSum ? "direct_sum" : "closed_form";
}

}  // namespace atqft
