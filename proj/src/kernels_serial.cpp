#include "atqft/kernels.hpp"
#include "kernel_common.hpp"

namespace atqft::kernels {

using namespace detail;

PhaseHistogram cs_phases_serial(const IntegerForm& form, std::int64_t level) {
  const std::int64_t m = form.order;
  const std::int64_t n = mod(level, m);
  PhaseHistogram h(static_cast<std::size_t>(m), 0);
  const std::uint64_t count = element_count(form);
  std::vector<std::int64_t> t, row;
  decode(form, 0, t);
  for (std::uint64_t idx = 0; idx < count; ++idx, advance(form, t)) {
    linear_form(form, t, row);
    ++h[phase_index(n, dot(row, t, m), m)];
  }
  return h;
}

PhaseHistogram bf_phases_serial(const IntegerForm& form, std::int64_t level) {
  const std::int64_t m = form.order;
  const std::int64_t n = mod(level, m);
  PhaseHistogram h(static_cast<std::size_t>(m), 0);
  const std::uint64_t count = element_count(form);
  std::vector<std::int64_t> a, b, row;
  decode(form, 0, a);
  for (std::uint64_t ia = 0; ia < count; ++ia, advance(form, a)) {
    linear_form(form, a, row);
    decode(form, 0, b);
    for (std::uint64_t ib = 0; ib < count; ++ib, advance(form, b))
      ++h[phase_index(n, dot(row, b, m), m)];
  }
  return h;
}

}  // namespace atqft::kernels
