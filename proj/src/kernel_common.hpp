#pragma once

#include <cstdint>
#include <vector>

#include "atqft/linking.hpp"

namespace atqft::kernels::detail {

inline std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

inline std::int64_t mulmod(std::int64_t a, std::int64_t b, std::int64_t m) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % m);
}

inline std::uint64_t element_count(const IntegerForm& form) {
  std::uint64_t n = 1;
  for (auto p : form.radices) n *= static_cast<std::uint64_t>(p);
  return n;
}

// Mixed-radix digits of a linear index, last coordinate fastest.
inline void decode(const IntegerForm& form, std::uint64_t index, std::vector<std::int64_t>& digits) {
  digits.assign(form.size(), 0);
  for (std::size_t i = form.size(); i-- > 0;) {
    const auto p = static_cast<std::uint64_t>(form.radices[i]);
    digits[i] = static_cast<std::int64_t>(index % p);
    index /= p;
  }
}

inline void advance(const IntegerForm& form, std::vector<std::int64_t>& digits) {
  for (std::size_t i = digits.size(); i-- > 0;) {
    if (++digits[i] < form.radices[i]) return;
    digits[i] = 0;
  }
}

// row[j] = sum_i t_i a_ij mod order
inline void linear_form(const IntegerForm& form, const std::vector<std::int64_t>& t,
                        std::vector<std::int64_t>& row) {
  const std::int64_t m = form.order;
  row.assign(form.size(), 0);
  for (std::size_t i = 0; i < form.size(); ++i) {
    if (t[i] == 0) continue;
    for (std::size_t j = 0; j < form.size(); ++j)
      row[j] = (row[j] + mulmod(t[i], form.at(i, j), m)) % m;
  }
}

inline std::int64_t dot(const std::vector<std::int64_t>& row, const std::vector<std::int64_t>& t,
                        std::int64_t m) {
  std::int64_t s = 0;
  for (std::size_t j = 0; j < t.size(); ++j) s = (s + mulmod(row[j], t[j], m)) % m;
  return s;
}

// Inner BF sweep over b for a fixed row: scales the row by the level once,
// then keeps s = row . b mod m up to date as b advances, so each term costs
// one modular addition.
template <typename Histogram>
inline void accumulate_row(const IntegerForm& form, const std::vector<std::int64_t>& row,
                           std::int64_t level_mod, std::uint64_t count, Histogram& h) {
  const std::int64_t m = form.order;
  const std::size_t n = form.size();
  std::vector<std::int64_t> step(n), wrap(n), digits(n, 0);
  for (std::size_t j = 0; j < n; ++j) {
    step[j] = mulmod(level_mod, row[j], m);
    wrap[j] = mulmod(step[j], form.radices[j], m);
  }
  std::int64_t s = 0;
  for (std::uint64_t ib = 0; ib < count; ++ib) {
    ++h[static_cast<std::size_t>(s == 0 ? 0 : m - s)];
    for (std::size_t j = n; j-- > 0;) {
      s += step[j];
      if (s >= m) s -= m;
      if (++digits[j] < form.radices[j]) break;
      digits[j] = 0;
      s -= wrap[j];
      if (s < 0) s += m;
    }
  }
}

// Exponent k of exp(2 pi i k / m) for the phase exp(-2 pi i N s / m).
inline std::size_t phase_index(std::int64_t level_mod, std::int64_t s, std::int64_t m) {
  return static_cast<std::size_t>(mod(-mulmod(level_mod, s, m), m));
}

}  // namespace atqft::kernels::detail
