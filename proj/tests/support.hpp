#pragma once

// Test-only oracles and generators. Nothing here calls into the code paths
// it is used to check: determinants by cofactor expansion, invariant factors
// by determinantal divisors, linking forms by coset enumeration, partition
// sums in floating point.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <vector>

#include "atqft/cyclotomic.hpp"
#include "atqft/intlinalg.hpp"
#include "atqft/linking.hpp"
#include "atqft/manifolds.hpp"

namespace atqft::testing {

// Laplace expansion along the first row.
inline Integer cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Integer total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(m(0, j)) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    const Integer term = m(0, j) * cofactor_det(minor);
    total += (j % 2 == 0) ? term : Integer(-term);
  }
  return total;
}

// adj(m) / det(m).
inline RationalMatrix adjugate_inverse(const IntMatrix& m) {
  const std::size_t n = m.rows();
  const Integer d = cofactor_det(m);
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      for (std::size_t r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (std::size_t c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor(rr, cc++) = m(r, c);
        }
        ++rr;
      }
      Integer cof = cofactor_det(minor);
      if ((i + j) % 2) cof = -cof;
      inv(i, j) = Rational(cof, d);
      inv(i, j).canonicalize();
    }
  return inv;
}

inline void for_each_subset(std::size_t n, std::size_t k,
                            const std::function<void(const std::vector<std::size_t>&)>& f) {
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  for (;;) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Invariant factors d_k = D_k / D_{k-1}, D_k = gcd of all k x k minors.
inline std::vector<Integer> invariant_factors_by_minors(const IntMatrix& m) {
  const std::size_t n = std::min(m.rows(), m.cols());
  std::vector<Integer> out;
  Integer prev = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Integer g = 0;
    for_each_subset(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        IntMatrix minor(k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) minor(a, b) = m(rows[a], cols[b]);
        Integer d = cofactor_det(minor);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
      });
    });
    if (sgn(g) == 0) {
      for (; k <= n; ++k) out.push_back(0);
      break;
    }
    out.push_back(g / prev);
    prev = g;
  }
  return out;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols,
                               long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

// Product of random elementary operations; determinant +-1.
inline IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n, int steps = 0) {
  IntMatrix u = IntMatrix::identity(n);
  if (n < 2) {
    if (n == 1 && (rng() & 1)) u(0, 0) = -1;
    return u;
  }
  if (steps == 0) steps = static_cast<int>(2 * n);
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<long> factor(-2, 2);
  for (int s = 0; s < steps; ++s) {
    const std::size_t i = pick(rng);
    std::size_t j = pick(rng);
    if (i == j) j = (j + 1) % n;
    u.add_row_multiple(i, j, factor(rng));
    if (rng() % 4 == 0) u.swap_rows(i, j);
  }
  return u;
}

// Symmetric presentation with cokernel Z/p1 + ... + Z/pn: one oriented lens
// chain per factor, scrambled by a unimodular congruence.
inline IntMatrix random_presentation(std::mt19937_64& rng, const std::vector<long>& orders) {
  IntMatrix l;
  for (long p : orders) {
    std::vector<long> units;
    for (long q = 1; q < p; ++q)
      if (std::gcd(p, q) == 1) units.push_back(q);
    const long q = units[rng() % units.size()];
    Manifold lens = lens_space(p, q);
    if (rng() & 1) lens = lens.reversed();
    l = block_diagonal(l, lens.linking_matrix());
  }
  const IntMatrix u = random_unimodular(rng, l.rows());
  return u.transpose() * l * u;
}

// Every invariant-factor chain p1 | p2 | ... with entries in [lo, hi], at most
// max_len factors and product <= max_order.
inline std::vector<std::vector<long>> torsion_chains(long lo, long hi, std::size_t max_len,
                                                     long max_order) {
  std::vector<std::vector<long>> out;
  std::vector<long> cur;
  std::function<void(long)> extend = [&](long product) {
    if (!cur.empty()) out.push_back(cur);
    if (cur.size() == max_len) return;
    for (long p = lo; p <= hi; ++p) {
      if (!cur.empty() && p % cur.back() != 0) continue;
      if (product * p > max_order) continue;
      cur.push_back(p);
      extend(product * p);
      cur.pop_back();
    }
  };
  extend(1);
  return out;
}

// All values -x^T l^{-1} y mod 1 over coset representatives of Z^n / l Z^n,
// keyed by the class of x. Classes are found by enumerating the box
// [0, |det|)^n and identifying x ~ y when l^{-1}(x - y) is integral.
struct CosetForm {
  std::vector<std::vector<long>> reps;
  std::map<std::pair<std::size_t, std::size_t>, Rational> value;
};

inline CosetForm brute_force_linking(const IntMatrix& l) {
  const std::size_t n = l.rows();
  const RationalMatrix inv = adjugate_inverse(l);
  const long det = std::labs(cofactor_det(l).get_si());
  CosetForm out;
  std::vector<std::vector<Rational>> keys;
  std::vector<long> x(n, 0);
  for (;;) {
    std::vector<Rational> key(n);
    for (std::size_t i = 0; i < n; ++i) {
      Rational s = 0;
      for (std::size_t j = 0; j < n; ++j) s += inv(i, j) * x[j];
      key[i] = mod_one(s);
    }
    if (std::find(keys.begin(), keys.end(), key) == keys.end()) {
      keys.push_back(key);
      out.reps.push_back(x);
    }
    std::size_t i = 0;
    while (i < n && ++x[i] == det) x[i++] = 0;
    if (i == n) break;
  }
  for (std::size_t a = 0; a < out.reps.size(); ++a)
    for (std::size_t b = 0; b < out.reps.size(); ++b) {
      Rational s = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) s += out.reps[a][i] * inv(i, j) * out.reps[b][j];
      out.value[{a, b}] = mod_one(-s);
    }
  return out;
}

inline std::vector<Rational> sorted(std::vector<Rational> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// Multiset {Q(t, t)} over the torsion subgroup.
inline std::vector<Rational> diagonal_values(const LinkingForm& form) {
  std::vector<Rational> out;
  for (const auto& t : torsion_elements(form.group())) out.push_back(eval_q(form, t, t).value());
  return sorted(out);
}

// Multiset {Q(a, b)} over ordered pairs.
inline std::vector<Rational> pair_values(const LinkingForm& form) {
  std::vector<Rational> out;
  const TorsionEnumerator e = torsion_elements(form.group());
  for (const auto& a : e)
    for (const auto& b : e) out.push_back(eval_q(form, a, b).value());
  return sorted(out);
}

using Complex = std::complex<long double>;

inline Complex phase(const Rational& r) {
  const long double pi = 3.141592653589793238462643383279502884L;
  const long double x = static_cast<long double>(r.get_num().get_si()) /
                        static_cast<long double>(r.get_den().get_si());
  return std::polar<long double>(1.0L, 2.0L * pi * x);
}

// sum_t exp(-2 pi i N Q(t, t)) in long double.
inline Complex float_cs(const LinkingForm& form, long n) {
  Complex s = 0;
  for (const auto& t : torsion_elements(form.group()))
    s += phase(mod_one(Rational(-n) * eval_q(form, t, t).value()));
  return s;
}

inline Complex to_complex(const CyclotomicNumber& c) {
  Complex s = 0;
  for (const auto& [k, coeff] : c.coeffs()) {
    Rational r(Integer(static_cast<long>(k)), Integer(static_cast<long>(c.order())));
    r.canonicalize();
    s += static_cast<long double>(coeff.get_d()) * phase(r);
  }
  return s;
}

}  // namespace atqft::testing
