#include "atqft/cyclotomic.hpp"

#include <mpfr.h>

#include <cmath>
#include <mutex>
#include <numeric>
#include <sstream>

#include "atqft/errors.hpp"

namespace atqft {

namespace {

std::int64_t positive_mod(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t unified_order(std::int64_t a, std::int64_t b, std::int64_t cap) {
  const std::int64_t g = std::gcd(a, b);
  const std::int64_t l = (a / g) * b;
  if (l / b != a / g || l > cap)
    throw OrderOverflowError("root-of-unity order lcm(" + std::to_string(a) + ", " +
                             std::to_string(b) + ") exceeds cap " + std::to_string(cap));
  return l;
}

// Moebius function by trial division.
int moebius(std::int64_t n) {
  int mu = 1;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    n /= p;
    if (n % p == 0) return 0;
    mu = -mu;
  }
  if (n > 1) mu = -mu;
  return mu;
}

// p *= (x^d - 1)
void multiply_binomial(std::vector<Integer>& p, std::int64_t d) {
  std::vector<Integer> out(p.size() + static_cast<std::size_t>(d));
  for (std::size_t j = 0; j < p.size(); ++j) {
    out[j + static_cast<std::size_t>(d)] += p[j];
    out[j] -= p[j];
  }
  p = std::move(out);
}

// p /= (x^d - 1), exact: p_j = q_{j-d} - q_j.
void divide_binomial(std::vector<Integer>& p, std::int64_t d) {
  const std::size_t ds = static_cast<std::size_t>(d);
  std::vector<Integer> q(p.size() - ds);
  for (std::size_t j = 0; j < q.size(); ++j) {
    q[j] = -p[j];
    if (j >= ds) q[j] += q[j - ds];
  }
  p = std::move(q);
}

class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  ~Mpfr() { mpfr_clear(v_); }
  Mpfr(const Mpfr&) = delete;
  Mpfr& operator=(const Mpfr&) = delete;
  mpfr_ptr get() { return v_; }

 private:
  mpfr_t v_;
};

}  // namespace

const std::vector<Integer>& cyclotomic_polynomial(std::int64_t m) {
  if (m < 1) throw InvalidArgumentError("cyclotomic polynomial order must be positive");
  static std::mutex mutex;
  static std::map<std::int64_t, std::vector<Integer>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  if (auto it = cache.find(m); it != cache.end()) return it->second;

  // Phi_m = prod_{d | m} (x^d - 1)^{mu(m/d)}; multiply first so every
  // division is exact.
  std::vector<std::int64_t> up, down;
  for (std::int64_t d = 1; d <= m; ++d) {
    if (m % d != 0) continue;
    const int mu = moebius(m / d);
    if (mu == 1) up.push_back(d);
    if (mu == -1) down.push_back(d);
  }
  std::vector<Integer> p{Integer(1)};
  for (auto d : up) multiply_binomial(p, d);
  for (auto d : down) divide_binomial(p, d);
  return cache.emplace(m, std::move(p)).first->second;
}

CyclotomicNumber::CyclotomicNumber(const Integer& constant) {
  if (sgn(constant) != 0) coeffs_.emplace(0, constant);
}

CyclotomicNumber::CyclotomicNumber(std::int64_t order,
                                   const std::map<std::int64_t, Integer>& coeffs)
    : order_(order) {
  if (order < 1) throw InvalidArgumentError("root-of-unity order must be positive");
  for (const auto& [k, c] : coeffs) {
    if (sgn(c) == 0) continue;
    const std::int64_t e = positive_mod(k, order);
    auto [it, inserted] = coeffs_.emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (sgn(it->second) == 0) coeffs_.erase(it);
    }
  }
}

CyclotomicNumber CyclotomicNumber::root(std::int64_t order, std::int64_t exponent) {
  return CyclotomicNumber(order, {{exponent, Integer(1)}});
}

Integer CyclotomicNumber::coefficient(std::int64_t k) const {
  auto it = coeffs_.find(positive_mod(k, order_));
  return it == coeffs_.end() ? Integer(0) : it->second;
}

CyclotomicNumber CyclotomicNumber::embedded(std::int64_t m) const {
  if (m < 1 || m % order_ != 0)
    throw InvalidArgumentError("target order must be a multiple of the current order");
  const std::int64_t step = m / order_;
  CyclotomicNumber out;
  out.order_ = m;
  for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(k * step, c);
  return out;
}

CyclotomicNumber CyclotomicNumber::conjugate() const {
  CyclotomicNumber out;
  out.order_ = order_;
  for (const auto& [k, c] : coeffs_) out.coeffs_.emplace(positive_mod(-k, order_), c);
  return out;
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber out = *this;
  for (auto& [k, c] : out.coeffs_) c = -c;
  return out;
}

CyclotomicNumber CyclotomicNumber::reduced() const {
  if (coeffs_.empty()) return CyclotomicNumber();
  const std::int64_t m = order_;
  const auto& phi = cyclotomic_polynomial(m);
  const std::int64_t deg = static_cast<std::int64_t>(phi.size()) - 1;

  std::vector<Integer> dense(static_cast<std::size_t>(m));
  for (const auto& [k, c] : coeffs_) dense[static_cast<std::size_t>(k)] = c;
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i + 1 < phi.size(); ++i)
    if (sgn(phi[i]) != 0) support.push_back(i);

  for (std::int64_t k = m - 1; k >= deg; --k) {
    const Integer f = dense[static_cast<std::size_t>(k)];
    if (sgn(f) == 0) continue;
    const std::size_t base = static_cast<std::size_t>(k - deg);
    for (auto i : support) dense[base + i] -= f * phi[i];
    dense[static_cast<std::size_t>(k)] = 0;
  }

  std::map<std::int64_t, Integer> kept;
  for (std::int64_t k = 0; k < std::min(deg, m); ++k)
    if (sgn(dense[static_cast<std::size_t>(k)]) != 0) kept.emplace(k, dense[static_cast<std::size_t>(k)]);
  if (kept.empty()) return CyclotomicNumber();
  if (kept.size() == 1 && kept.begin()->first == 0) return CyclotomicNumber(kept.begin()->second);
  return CyclotomicNumber(m, kept);
}

std::optional<Integer> CyclotomicNumber::as_integer() const {
  CyclotomicNumber r = reduced();
  if (r.coeffs_.empty()) return Integer(0);
  if (r.order_ == 1) return r.coeffs_.begin()->second;
  return std::nullopt;
}

bool CyclotomicNumber::is_zero() const {
  return coeffs_.empty() || reduced().coeffs_.empty();
}

Integer CyclotomicNumber::l1_norm() const {
  Integer s = 0;
  for (const auto& [k, c] : coeffs_) s += abs(c);
  return s;
}

CyclotomicNumber add(const CyclotomicNumber& a, const CyclotomicNumber& b,
                     std::int64_t order_cap) {
  const std::int64_t m = unified_order(a.order(), b.order(), order_cap);
  std::map<std::int64_t, Integer> sum = a.embedded(m).coeffs();
  const CyclotomicNumber eb = b.embedded(m);
  for (const auto& [k, c] : eb.coeffs()) sum[k] += c;
  return CyclotomicNumber(m, sum);
}

CyclotomicNumber mul(const CyclotomicNumber& a, const CyclotomicNumber& b,
                     std::int64_t order_cap) {
  const std::int64_t m = unified_order(a.order(), b.order(), order_cap);
  const CyclotomicNumber ea = a.embedded(m);
  const CyclotomicNumber eb = b.embedded(m);
  std::map<std::int64_t, Integer> prod;
  for (const auto& [i, ci] : ea.coeffs())
    for (const auto& [j, cj] : eb.coeffs()) prod[(i + j) % m] += ci * cj;
  return CyclotomicNumber(m, prod);
}

bool equals(const CyclotomicNumber& a, const CyclotomicNumber& b, std::int64_t order_cap) {
  return add(a, -b, order_cap).is_zero();
}

CyclotomicNumber root_term(const ModOne& q, const Integer& scale) {
  const ModOne r = scale * q;
  const Rational& v = r.value();
  if (!v.get_den().fits_slong_p())
    throw OrderOverflowError("root-of-unity order does not fit a machine integer");
  return CyclotomicNumber::root(v.get_den().get_si(), v.get_num().get_si());
}

GaussianApprox numeric(const CyclotomicNumber& a, int precision) {
  if (precision < 1 || precision > 16)
    throw InvalidArgumentError("numeric precision must be between 1 and 16 digits");
  if (a.coeffs().empty()) return {};

  const double terms = static_cast<double>(a.term_count());
  const mpfr_prec_t bits =
      static_cast<mpfr_prec_t>(std::ceil(precision * 3.3219280948873623 + 40 + std::log2(terms + 1)));

  Mpfr re(bits), im(bits), angle(bits), s(bits), c(bits), two_pi(bits);
  mpfr_const_pi(two_pi.get(), MPFR_RNDN);
  mpfr_mul_ui(two_pi.get(), two_pi.get(), 2, MPFR_RNDN);
  for (const auto& [k, coeff] : a.coeffs()) {
    mpfr_mul_si(angle.get(), two_pi.get(), static_cast<long>(k), MPFR_RNDN);
    mpfr_div_si(angle.get(), angle.get(), static_cast<long>(a.order()), MPFR_RNDN);
    mpfr_sin_cos(s.get(), c.get(), angle.get(), MPFR_RNDN);
    mpfr_mul_z(c.get(), c.get(), coeff.get_mpz_t(), MPFR_RNDN);
    mpfr_mul_z(s.get(), s.get(), coeff.get_mpz_t(), MPFR_RNDN);
    mpfr_add(re.get(), re.get(), c.get(), MPFR_RNDN);
    mpfr_add(im.get(), im.get(), s.get(), MPFR_RNDN);
  }

  GaussianApprox out;
  out.re = mpfr_get_d(re.get(), MPFR_RNDN);
  out.im = mpfr_get_d(im.get(), MPFR_RNDN);
  // Per term: angle, sin/cos and scaling each cost a few ulps (|angle| < 2 pi
  // amplifies by at most 8); each accumulation adds one more. Bounded by
  // (64 + terms) * 2^-bits * l1 per component, then the rounding to double.
  const double l1 = a.l1_norm().get_d() * (1.0 + 1e-12);
  const double working = (64.0 + terms) * std::ldexp(l1, -static_cast<int>(bits));
  const double to_double = std::ldexp(std::fabs(out.re) + std::fabs(out.im), -53);
  out.err = (2.0 * working + to_double) * (1.0 + 1e-12) + 1e-300;
  // Components indistinguishable from zero are reported as zero; the
  // discarded residue is added to the bound.
  for (double* x : {&out.re, &out.im})
    if (std::fabs(*x) <= working) {
      out.err += std::fabs(*x);
      *x = 0.0;
    }
  return out;
}

std::string to_string(const CyclotomicNumber& a) {
  if (a.coeffs().empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, c] : a.coeffs()) {
    const bool negative = sgn(c) < 0;
    const Integer mag = abs(c);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    if (k == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << '*';
    os << 'z' << a.order();
    if (k != 1) os << '^' << k;
  }
  return os.str();
}

}  // namespace atqft
