#include "padicfft/cz_tower.hpp"

#include <bit>

#include "padicfft/error.hpp"

namespace padicfft {

FFPoly cz_split(const FField& field, const FFPoly& f, unsigned e, Rng& rng) {
  require(field.characteristic() % 2 == 1, ErrorCode::EvenCharacteristic, "CZ splitting needs odd characteristic");
  FFPolyRing ring(field);
  const long n = ring.degree(f);
  require(e >= 1 && n >= 1 && n % static_cast<long>(e) == 0, ErrorCode::BadInput,
          "CZ: factor degree must divide deg f");
  FFPoly current = ring.monic(f);
  if (n == static_cast<long>(e)) return current;

  BigInt exponent;
  mpz_pow_ui(exponent.get_mpz_t(), field.order().get_mpz_t(), e);
  exponent = (exponent - 1) / 2;

  const unsigned log_n = std::max(1u, static_cast<unsigned>(std::bit_width(static_cast<unsigned long>(n - 1))));
  const unsigned max_rounds = 64 * log_n;
  auto keep_smaller = [&](const FFPoly& h) {
    FFPoly other = ring.quo(current, h);
    current = ring.degree(h) <= ring.degree(other) ? h : ring.monic(other);
  };
  for (unsigned round = 0; ring.degree(current) != static_cast<long>(e); ++round) {
    require(round < max_rounds, ErrorCode::RandomnessFailure, "CZ: no split after the round budget");
    const FFPoly g = ring.random_monic(static_cast<std::size_t>(ring.degree(current)), rng);
    FFPoly h = ring.gcd(g, current);
    if (ring.degree(h) >= 1) {
      keep_smaller(h);
      continue;
    }
    const FFPoly t = ring.sub(ring.powmod(g, exponent, current), ring.one());
    h = ring.gcd(t, current);
    if (ring.degree(h) >= 1 && ring.degree(h) < ring.degree(current)) keep_smaller(h);
  }
  return current;
}

bool is_primitive_root(const FField& field, const FFElem& zeta, const FactoredOrder& s) {
  const BigInt order(static_cast<unsigned long>(s.value()));
  if (!field.equal(field.pow(zeta, order), field.one())) return false;
  for (const auto& f : s.factors()) {
    const BigInt sub(static_cast<unsigned long>(s.value() / f.prime));
    if (field.equal(field.pow(zeta, sub), field.one())) return false;
  }
  return true;
}

namespace {

// t with t = 0 (mod a) and t = 1 (mod b), for coprime a, b.
u64 crt_selector(u64 a, u64 b) {
  if (b == 1) return 0;
  // a^{-1} mod b through the extended Euclid on signed values.
  long long old_r = static_cast<long long>(a % b), r = static_cast<long long>(b);
  long long old_s = 1, s = 0;
  while (r != 0) {
    const long long q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  long long inv = old_s % static_cast<long long>(b);
  if (inv < 0) inv += static_cast<long long>(b);
  return static_cast<u64>(static_cast<u128>(a) * static_cast<u64>(inv) % (static_cast<u128>(a) * b));
}

u64 checked_pow(u64 base, unsigned e) {
  u128 r = 1;
  for (unsigned i = 0; i < e; ++i) {
    r *= base;
    require(r <= ~u64{0}, ErrorCode::OutOfRange, "prime power overflows 64 bits");
  }
  return static_cast<u64>(r);
}

struct PrimeClimb {
  FField field;
  u64 base_order;  // a: Y-orders adjoined before this prime
  u64 gen_order;   // current Y is a primitive gen_order-th root
  FFElem zeta_a;
  FFElem zeta_qj;  // zeta_{q^j}
};

// Rebase onto F_p[Y]/minpoly(gamma), where gamma generates E over F_p.
template <class Field>
FField flatten(const Field& e_field, const typename Field::Elem& gamma, u64 p, OpCounter* counter) {
  return FField(p, minimal_poly_from_orbit(e_field, gamma), counter);
}

// After rebasing to Y = zeta_a * zeta_{q^j}, recover both factors as powers of Y.
void split_generator(PrimeClimb& climb, u64 qj) {
  const u64 t_q = crt_selector(climb.base_order, qj);
  const u64 modulus = climb.base_order * qj;
  const u64 t_a = (1 + modulus - t_q) % modulus;
  const FFElem y = climb.field.gen();
  climb.zeta_qj = climb.field.pow(y, BigInt(static_cast<unsigned long>(t_q)));
  climb.zeta_a = climb.field.pow(y, BigInt(static_cast<unsigned long>(t_a)));
  climb.gen_order = modulus;
}

}  // namespace

RootOfUnity build_root_of_unity(u64 p, const FactoredOrder& s, Rng& rng, OpCounter* counter) {
  require(p != 2, ErrorCode::EvenPrime, "p = 2 is not supported");
  require(is_prime_u64(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  require(s.coprime_to(p), ErrorCode::NotCoprime, "s must be coprime to p");

  RootOfUnity out{TowerState{FField::prime(p, counter), 1, {}}, {}};
  out.state.zeta = out.state.field.gen();

  for (const auto& [q, v] : s.factors()) {
    PrimeClimb climb{out.state.field, out.state.order, out.state.order, out.state.field.gen(), out.state.field.one()};
    const u64 a = climb.base_order;
    unsigned j = 0;
    while (j < v) {
      const unsigned level = j + 1;
      const u64 e = tower_step_degree(p, a, q, level);
      FFPolyRing ring(climb.field);

      bool rest_are_full = level >= 2;
      for (unsigned k = level; k <= v && rest_are_full; ++k) rest_are_full = tower_step_degree(p, a, q, k) == q;
      if (rest_are_full) {
        // F(zeta_{q^v}) = F[X]/(X^{q^(v-j)} - zeta_{q^j}), irreducible by the degree count.
        const u64 width = checked_pow(q, v - j);
        FFPoly binomial = ring.monomial(climb.field.one(), static_cast<std::size_t>(width));
        binomial.coeffs[0] = climb.field.neg(climb.zeta_qj);
        QuotientField<FField> ext(climb.field, binomial);
        const auto gamma = ext.mul(ext.embed(climb.zeta_a), ext.gen());
        climb.field = flatten(ext, gamma, p, counter);
        split_generator(climb, checked_pow(q, v));
        for (unsigned k = level; k <= v; ++k) out.steps.push_back({q, k, q, TowerStep::Method::Binomial});
        j = v;
        break;
      }

      FFPoly target;
      if (level == 1) {
        target.coeffs.assign(q, climb.field.one());  // Phi_q
      } else {
        target = ring.monomial(climb.field.one(), q);
        target.coeffs[0] = climb.field.neg(climb.zeta_qj);
      }
      const bool irreducible = static_cast<long>(e) == ring.degree(target);
      const FFPoly g = irreducible ? ring.monic(target) : cz_split(climb.field, target, static_cast<unsigned>(e), rng);
      out.steps.push_back({q, level, e, irreducible ? TowerStep::Method::Irreducible : TowerStep::Method::Split});

      if (e == 1) {
        climb.zeta_qj = climb.field.neg(g.coeffs[0]);
      } else {
        QuotientField<FField> ext(climb.field, g);
        const auto gamma = ext.mul(ext.embed(climb.zeta_a), ext.gen());
        climb.field = flatten(ext, gamma, p, counter);
        split_generator(climb, checked_pow(q, level));
      }
      j = level;
    }

    const u64 full = a * checked_pow(q, v);
    if (climb.gen_order != full) {
      const FFElem gamma = climb.field.mul(climb.zeta_a, climb.zeta_qj);
      climb.field = flatten(climb.field, gamma, p, counter);
    }
    out.state = TowerState{climb.field, full, climb.field.gen()};
    require(out.state.field.degree() == multiplicative_order(p, full), ErrorCode::InternalInvariant,
            "tower degree differs from ord_a(p)");
  }
  return out;
}

}  // namespace padicfft
