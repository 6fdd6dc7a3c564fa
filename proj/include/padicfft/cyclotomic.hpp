#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "padicfft/integer_math.hpp"

namespace padicfft {

/// A positive integer s with its prime factorization (primes increasing).
class FactoredOrder {
 public:
  FactoredOrder() = default;
  explicit FactoredOrder(u64 s);
  /// Validates that the factors are increasing primes with product s.
  FactoredOrder(u64 s, std::vector<PrimePower> factors);

  u64 value() const { return s_; }
  const std::vector<PrimePower>& factors() const { return factors_; }
  bool coprime_to(u64 p) const;
  /// The radix sequence: each prime repeated by its exponent, nondecreasing.
  std::vector<u64> radices() const;
  /// sum_i v_i * p_i
  u64 weighted_prime_sum() const;

  friend bool operator==(const FactoredOrder&, const FactoredOrder&) = default;

 private:
  u64 s_ = 1;
  std::vector<PrimePower> factors_;
};

/// ord_m(p), the least r >= 1 with p^r = 1 (mod m).
/// Strips prime factors off the Carmichael exponent lambda(m).
u64 multiplicative_order(u64 p, u64 m);

/// Largest e with q^e | x.
unsigned padic_valuation(long long x, u64 q);
unsigned padic_valuation(const BigInt& x, u64 q);

u64 euler_phi(u64 m);

/// [Q_p(zeta_{s p^n}) : Q_p] = ord_s(p) * phi(p^n).
u64 cyclotomic_degree(u64 p, u64 s, unsigned n);

/// [F_p(zeta_a, zeta_{p0^v}) : F_p(zeta_a, zeta_{p0^{v-1}})], computed as
/// ord_{a p0^v}(p) / ord_{a p0^{v-1}}(p).
u64 tower_step_degree(u64 p, u64 a, u64 p0, unsigned v);

/// The threshold closed forms for the same step degree. Returned only as a
/// cross-check; they disagree with exact orders for p0 = 2 and p = 3 mod 4.
u64 tower_step_degree_closed_form(u64 p, u64 a, u64 p0, unsigned v);

/// Integer coefficients of Phi_s, constant term first; 1 <= s <= 10^6.
/// Memoized and safe to call concurrently.
const std::vector<long long>& cyclotomic_polynomial(u64 s);

/// Positive divisors of n in increasing order.
std::vector<u64> divisors(u64 n);

}  // namespace padicfft
