#include "padicfft/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>

#include "padicfft/error.hpp"

namespace padicfft {

FactoredOrder::FactoredOrder(u64 s) : s_(s) {
  require(s >= 1, ErrorCode::ZeroInput, "order must be positive");
  factors_ = factorize(s);
}

FactoredOrder::FactoredOrder(u64 s, std::vector<PrimePower> factors) : s_(s), factors_(std::move(factors)) {
  u128 product = 1;
  u64 last = 1;
  for (const auto& f : factors_) {
    require(f.prime > last && is_prime_u64(f.prime) && f.exponent >= 1, ErrorCode::BadInput,
            "factors must be increasing primes with positive exponents");
    last = f.prime;
    for (unsigned i = 0; i < f.exponent; ++i) {
      product *= f.prime;
      require(product <= s, ErrorCode::BadInput, "factorization does not match s");
    }
  }
  require(product == s, ErrorCode::BadInput, "factorization does not match s");
}

bool FactoredOrder::coprime_to(u64 p) const {
  return std::none_of(factors_.begin(), factors_.end(), [p](const PrimePower& f) { return p % f.prime == 0; });
}

std::vector<u64> FactoredOrder::radices() const {
  std::vector<u64> r;
  for (const auto& f : factors_) r.insert(r.end(), f.exponent, f.prime);
  return r;
}

u64 FactoredOrder::weighted_prime_sum() const {
  u64 sum = 0;
  for (const auto& f : factors_) sum += f.prime * f.exponent;
  return sum;
}

namespace {

u64 carmichael_lambda(const std::vector<PrimePower>& factors) {
  u64 lambda = 1;
  for (const auto& [q, e] : factors) {
    u64 term;
    if (q == 2) {
      term = e <= 2 ? (u64{1} << (e - 1)) : (u64{1} << (e - 2));
    } else {
      term = q - 1;
      for (unsigned i = 1; i < e; ++i) term *= q;
    }
    lambda = lcm_u64(lambda, term);
  }
  return lambda;
}

}  // namespace

u64 multiplicative_order(u64 p, u64 m) {
  require(m >= 1, ErrorCode::ZeroInput, "modulus must be positive");
  if (m == 1) return 1;
  require(gcd_u64(p % m, m) == 1, ErrorCode::NotCoprime,
          "gcd(" + std::to_string(p) + ", " + std::to_string(m) + ") != 1");
  u64 order = carmichael_lambda(factorize(m));
  for (const auto& [q, e] : factorize(order)) {
    (void)e;
    while (order % q == 0 && pow_mod(p, order / q, m) == 1) order /= q;
  }
  return order;
}

unsigned padic_valuation(long long x, u64 q) {
  require(x != 0, ErrorCode::ZeroInput, "valuation of zero is undefined");
  require(q >= 2, ErrorCode::BadInput, "valuation base must be >= 2");
  u128 ax = x < 0 ? static_cast<u128>(-(x + 1)) + 1 : static_cast<u128>(x);
  unsigned v = 0;
  while (ax % q == 0) {
    ax /= q;
    ++v;
  }
  return v;
}

unsigned padic_valuation(const BigInt& x, u64 q) {
  require(x != 0, ErrorCode::ZeroInput, "valuation of zero is undefined");
  BigInt rest = abs(x);
  unsigned v = 0;
  while (mpz_divisible_ui_p(rest.get_mpz_t(), q)) {
    mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), q);
    ++v;
  }
  return v;
}

u64 euler_phi(u64 m) {
  require(m >= 1, ErrorCode::ZeroInput, "phi needs a positive argument");
  u64 phi = m;
  for (const auto& f : factorize(m)) phi = phi / f.prime * (f.prime - 1);
  return phi;
}

u64 cyclotomic_degree(u64 p, u64 s, unsigned n) {
  require(is_prime_u64(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  require(s >= 1, ErrorCode::ZeroInput, "s must be positive");
  require(s % p != 0, ErrorCode::NotCoprime, "s must be coprime to p");
  const u64 order = multiplicative_order(p, s);
  if (n == 0) {
    // p^d - 1 >= s, i.e. d >= log_p(s + 1).
    require(big_pow(p, static_cast<unsigned>(order)) >= BigInt(static_cast<unsigned long>(s)) + 1,
            ErrorCode::InternalInvariant, "degree lower bound violated");
    return order;
  }
  u128 phi = p - 1;
  for (unsigned i = 1; i < n; ++i) phi *= p;
  const u128 deg = phi * order;
  require(deg <= ~u64{0}, ErrorCode::OutOfRange, "cyclotomic degree overflows 64 bits");
  return static_cast<u64>(deg);
}

u64 tower_step_degree(u64 p, u64 a, u64 p0, unsigned v) {
  require(v >= 1, ErrorCode::BadInput, "tower step needs v >= 1");
  require(p != p0, ErrorCode::NotCoprime, "p and p0 must be distinct");
  require(gcd_u64(a, p) == 1 && gcd_u64(a, p0) == 1, ErrorCode::NotCoprime, "a must be coprime to p and p0");
  u128 lower = a;
  for (unsigned i = 1; i < v; ++i) lower *= p0;
  const u128 upper = lower * p0;
  require(upper <= ~u64{0}, ErrorCode::OutOfRange, "tower order overflows 64 bits");
  return multiplicative_order(p, static_cast<u64>(upper)) / multiplicative_order(p, static_cast<u64>(lower));
}

u64 tower_step_degree_closed_form(u64 p, u64 a, u64 p0, unsigned v) {
  require(v >= 1, ErrorCode::BadInput, "tower step needs v >= 1");
  const u64 base_degree = multiplicative_order(p, a);
  if (p0 != 2) {
    const u64 r = multiplicative_order(p, p0);
    if (v == 1) return r / gcd_u64(base_degree, r);
    // v_{p0}(p^r - 1) via big integers: p^r can exceed 64 bits.
    const BigInt pr = big_pow(p, static_cast<unsigned>(r)) - 1;
    const unsigned l = padic_valuation(pr, p0) + (base_degree % p0 == 0 ? padic_valuation(static_cast<long long>(base_degree), p0) : 0);
    return v <= l ? 1 : p0;
  }
  const unsigned l = padic_valuation(static_cast<long long>(p - 1), 2) + padic_valuation(static_cast<long long>(p + 1), 2) +
                     (base_degree % 2 == 0 ? padic_valuation(static_cast<long long>(base_degree), 2) : 0) - 1;
  return v <= l ? 1 : 2;
}

std::vector<u64> divisors(u64 n) {
  std::vector<u64> divs{1};
  for (const auto& [q, e] : factorize(n)) {
    const std::size_t count = divs.size();
    u64 power = 1;
    for (unsigned i = 0; i < e; ++i) {
      power *= q;
      for (std::size_t j = 0; j < count; ++j) divs.push_back(divs[j] * power);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

namespace {

int moebius(u64 n) {
  int mu = 1;
  for (const auto& f : factorize(n)) {
    if (f.exponent > 1) return 0;
    mu = -mu;
  }
  return mu;
}

long long checked_add(long long a, long long b) {
  long long r;
  require(!__builtin_add_overflow(a, b, &r), ErrorCode::OutOfRange, "cyclotomic coefficient overflow");
  return r;
}

// Phi_s = prod_{d | s} (X^d - 1)^{mu(s/d)}: multiply the numerator binomials,
// then divide exactly by the denominator ones. Both steps are sparse.
std::vector<long long> compute_cyclotomic(u64 s) {
  std::vector<long long> poly{1};
  std::vector<u64> denominators;
  for (u64 d : divisors(s)) {
    const int mu = moebius(s / d);
    if (mu == 1) {
      std::vector<long long> next(poly.size() + d, 0);
      for (std::size_t i = 0; i < poly.size(); ++i) {
        next[i + d] = checked_add(next[i + d], poly[i]);
        next[i] = checked_add(next[i], -poly[i]);
      }
      poly = std::move(next);
    } else if (mu == -1) {
      denominators.push_back(d);
    }
  }
  for (u64 d : denominators) {
    // poly = q * (X^d - 1): q_i = q_{i-d} - poly_i, read from the top.
    const std::size_t n = poly.size() - d;
    std::vector<long long> q(n, 0);
    for (std::size_t i = n; i-- > 0;) {
      q[i] = i + d < n ? checked_add(poly[i + d], q[i + d]) : poly[i + d];
    }
    poly = std::move(q);
  }
  return poly;
}

}  // namespace

const std::vector<long long>& cyclotomic_polynomial(u64 s) {
  require(s >= 1 && s <= 1'000'000, ErrorCode::OutOfRange, "cyclotomic index must be in [1, 10^6]");
  static std::mutex mutex;
  static std::map<u64, std::unique_ptr<const std::vector<long long>>> memo;
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(s); it != memo.end()) return *it->second;
  }
  auto value = std::make_unique<const std::vector<long long>>(compute_cyclotomic(s));
  std::lock_guard lock(mutex);
  auto [it, inserted] = memo.emplace(s, std::move(value));
  return *it->second;
}

}  // namespace padicfft
