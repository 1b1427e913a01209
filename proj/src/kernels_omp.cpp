#include <omp.h>

#include <algorithm>

#include "atqft/kernels.hpp"
#include "kernel_common.hpp"

namespace atqft::kernels {

using namespace detail;

namespace {

void merge(PhaseHistogram& into, const PhaseHistogram& local) {
  for (std::size_t k = 0; k < into.size(); ++k) into[k] += local[k];
}

}  // namespace

int max_threads() { return omp_get_max_threads(); }

PhaseHistogram cs_phases_parallel(const IntegerForm& form, std::int64_t level) {
  const std::int64_t m = form.order;
  const std::int64_t n = mod(level, m);
  PhaseHistogram h(static_cast<std::size_t>(m), 0);
  const std::uint64_t count = element_count(form);
  const std::int64_t chunks =
      static_cast<std::int64_t>(std::min<std::uint64_t>(count, 64ULL * omp_get_max_threads()));

#pragma omp parallel
  {
    PhaseHistogram local(static_cast<std::size_t>(m), 0);
    std::vector<std::int64_t> t, row;
#pragma omp for schedule(static)
    for (std::int64_t c = 0; c < chunks; ++c) {
      const std::uint64_t begin = count * static_cast<std::uint64_t>(c) / chunks;
      const std::uint64_t end = count * static_cast<std::uint64_t>(c + 1) / chunks;
      decode(form, begin, t);
      for (std::uint64_t idx = begin; idx < end; ++idx, advance(form, t)) {
        linear_form(form, t, row);
        ++local[phase_index(n, dot(row, t, m), m)];
      }
    }
#pragma omp critical
    merge(h, local);
  }
  return h;
}

PhaseHistogram bf_phases_parallel(const IntegerForm& form, std::int64_t level) {
  const std::int64_t m = form.order;
  const std::int64_t n = mod(level, m);
  PhaseHistogram h(static_cast<std::size_t>(m), 0);
  const auto count = static_cast<std::int64_t>(element_count(form));

#pragma omp parallel
  {
    PhaseHistogram local(static_cast<std::size_t>(m), 0);
    std::vector<std::int64_t> a, row;
#pragma omp for schedule(dynamic, 16)
    for (std::int64_t ia = 0; ia < count; ++ia) {
      decode(form, static_cast<std::uint64_t>(ia), a);
      linear_form(form, a, row);
      accumulate_row(form, row, n, static_cast<std::uint64_t>(count), local);
    }
#pragma omp critical
    merge(h, local);
  }
  return h;
}

}  // namespace atqft::kernels
