#include "padicfft/integer_math.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "padicfft/error.hpp"

namespace padicfft {

BigInt big_pow(u64 base, unsigned exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), base, exponent);
  return result;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
  return static_cast<u64>(static_cast<u128>(a) * b % m);
}

u64 pow_mod(u64 base, u64 exponent, u64 m) {
  if (m == 1) return 0;
  u64 result = 1;
  base %= m;
  while (exponent) {
    if (exponent & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exponent >>= 1;
  }
  return result;
}

u64 gcd_u64(u64 a, u64 b) { return std::gcd(a, b); }

u64 lcm_u64(u64 a, u64 b) {
  if (a == 0 || b == 0) return 0;
  const u128 l = static_cast<u128>(a / gcd_u64(a, b)) * b;
  require(l <= ~u64{0}, ErrorCode::OutOfRange, "lcm overflows 64 bits");
  return static_cast<u64>(l);
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  static constexpr u64 kSmall[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 q : kSmall) {
    if (n % q == 0) return n == q;
  }
  u64 d = n - 1;
  unsigned r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  // These bases are a proven witness set for n < 3.3e24.
  for (u64 a : kSmall) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

constexpr u64 kTrialBound = 1u << 16;

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
u64 pollard_brent(u64 n) {
  if (n % 2 == 0) return 2;
  for (u64 c = 1; c < 1000; ++c) {
    u64 y = 2, x = 2, ys = 2, q = 1, g = 1;
    const u64 m = 128;
    u64 r = 1;
    auto f = [&](u64 v) { return (mul_mod(v, v, n) + c) % n; };
    do {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      u64 k = 0;
      do {
        ys = y;
        for (u64 i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mul_mod(q, x > y ? x - y : y - x, n);
        }
        g = gcd_u64(q, n);
        k += m;
      } while (k < r && g == 1);
      r <<= 1;
    } while (g == 1 && r < (u64{1} << 40));
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd_u64(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n && g != 1) return g;
  }
  fail(ErrorCode::FactoringFailure, "Pollard rho failed for " + std::to_string(n));
}

void factor_into(u64 n, std::map<u64, unsigned>& out) {
  if (n == 1) return;
  if (is_prime_u64(n)) {
    ++out[n];
    return;
  }
  const u64 f = pollard_brent(n);
  factor_into(f, out);
  factor_into(n / f, out);
}

}  // namespace

std::vector<PrimePower> factorize(u64 n) {
  require(n >= 1, ErrorCode::ZeroInput, "factorize: n must be positive");
  std::map<u64, unsigned> primes;
  for (u64 q = 2; q < kTrialBound && q * q <= n; q += (q == 2 ? 1 : 2)) {
    while (n % q == 0) {
      ++primes[q];
      n /= q;
    }
  }
  factor_into(n, primes);
  std::vector<PrimePower> result;
  result.reserve(primes.size());
  for (const auto& [prime, exponent] : primes) result.push_back({prime, exponent});
  return result;
}

std::vector<u64> first_primes(std::size_t count) {
  std::vector<u64> primes;
  for (u64 candidate = 2; primes.size() < count; ++candidate) {
    if (is_prime_u64(candidate)) primes.push_back(candidate);
  }
  return primes;
}

}  // namespace padicfft
