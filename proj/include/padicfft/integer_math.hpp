#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace padicfft {

using BigInt = mpz_class;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

/// p^e as an arbitrary-precision integer.
BigInt big_pow(u64 base, unsigned exponent);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exponent, u64 m);
u64 gcd_u64(u64 a, u64 b);
/// lcm, throws OutOfRange on 64-bit overflow.
u64 lcm_u64(u64 a, u64 b);

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime_u64(u64 n);

struct PrimePower {
  u64 prime = 0;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// Prime factorization with primes strictly increasing.
/// Trial division by small primes, then Pollard rho with Brent cycle detection.
std::vector<PrimePower> factorize(u64 n);

/// The first `count` primes: 2, 3, 5, ...
std::vector<u64> first_primes(std::size_t count);

}  // namespace padicfft
