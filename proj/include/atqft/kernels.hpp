#pragma once

// Phase-counting kernels behind the partition functions. Each kernel returns
// a histogram h of length form.order with h[k] = number of terms whose phase
// is exp(2 pi i k / order). The serial versions are the reference; the
// parallel ones must agree with them exactly.

#include <cstdint>
#include <vector>

#include "atqft/linking.hpp"

namespace atqft::kernels {

using PhaseHistogram = std::vector<std::uint64_t>;

/// Terms exp(-2 pi i N Q(t, t)) over all torsion elements t.
PhaseHistogram cs_phases_serial(const IntegerForm& form, std::int64_t level);
PhaseHistogram cs_phases_parallel(const IntegerForm& form, std::int64_t level);

/// Terms exp(-2 pi i N Q(a, b)) over all ordered pairs (a, b).
PhaseHistogram bf_phases_serial(const IntegerForm& form, std::int64_t level);
PhaseHistogram bf_phases_parallel(const IntegerForm& form, std::int64_t level);

/// Threads the parallel kernels will use.
int max_threads();

}  // namespace atqft::kernels
