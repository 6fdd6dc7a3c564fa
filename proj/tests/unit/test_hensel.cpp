#include "doctest.h"
#include "padicfft/cz_tower.hpp"
#include "padicfft/error.hpp"
#include "padicfft/hensel.hpp"
#include "../support/oracles.hpp"

using namespace padicfft;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::InternalInvariant;
}

ZPoly phi_mod(u64 s, const BigInt& m) {
  const auto& phi = cyclotomic_polynomial(s);
  ZPoly out;
  for (long long c : phi) out.emplace_back(static_cast<long>(c));
  return zpoly_reduce(out, m);
}

}  // namespace

TEST_CASE("doublings for a target precision") {
  CHECK(doublings_for(1) == 0);
  CHECK(doublings_for(2) == 1);
  CHECK(doublings_for(3) == 2);
  CHECK(doublings_for(32) == 5);
  CHECK(doublings_for(33) == 6);
}

TEST_CASE("X is already a 4th root of unity mod X^2 + 1") {
  LiftResult r = newton_lift_root(FpPoly{{1, 0, 1}}, FactoredOrder(4), 3, 3);
  CHECK(r.alpha == RingElement::generator(r.descriptor));
  CHECK(r.descriptor.ctx().precision() == 8);
  CHECK(expand_lifted_factor(r) == ZPoly{1, 0, 1});
}

TEST_CASE("trivial order") {
  LiftResult r = newton_lift_root(FpPoly{{6, 1}}, FactoredOrder(1), 2, 7);  // Y - 1
  CHECK(r.alpha.is_one());
}

TEST_CASE("fifth roots mod 361 against exhaustive search") {
  const oracle::IntPoly F{1, 5, 1};
  const auto roots = oracle::roots_of_unity(5, F, 361);
  LiftResult r = newton_lift_root(FpPoly{{1, 5, 1}}, FactoredOrder(5), 1, 19);
  bool found = false;
  for (const auto& x : roots) found = found || x == r.alpha.coeffs();
  CHECK(found);
  // alpha = X mod 19
  CHECK(r.alpha.coeffs()[0] % 19 == 0);
  CHECK(r.alpha.coeffs()[1] % 19 == 1);
}

TEST_CASE("lifted factors of Phi_5 mod 361") {
  LiftResult a = newton_lift_root(FpPoly{{1, 5, 1}}, FactoredOrder(5), 1, 19);
  const ZPoly fa = expand_lifted_factor(a);
  CHECK(fa == ZPoly{1, 43, 1});
  const auto brute = oracle::quadratic_factor_lift({1, 1, 1, 1, 1}, 19, 5, 1);
  REQUIRE(brute.has_value());
  CHECK(*brute == oracle::IntPoly{1, 43, 1});

  LiftResult b = newton_lift_root(FpPoly{{1, 15, 1}}, FactoredOrder(5), 1, 19);
  const ZPoly fb = expand_lifted_factor(b);
  const auto [quotient, remainder] = zpoly_divmod_monic(ZPoly{1, 1, 1, 1, 1}, fa, BigInt(361));
  CHECK(remainder.empty());
  CHECK(fb == quotient);
  CHECK(fb == ZPoly{1, 319, 1});
}

TEST_CASE("inverse power update") {
  ExtensionDescriptor A(PadicCtx(19, 2), {1, 5, 1});
  RingElement x = RingElement::generator(A);
  RingElement v = inverse_power_update(x, 5, 1);
  CHECK((v * ring_pow(x, 4)).is_one());
  ExtensionDescriptor B(PadicCtx(3, 2), {1, 0, 1});
  CHECK(inverse_power_update(RingElement::generator(B), 4, 1) == RingElement::generator(B));
  // not a root mod p
  CHECK(code_of([&] { inverse_power_update(RingElement::constant(A, 2), 5, 1); }) == ErrorCode::PreconditionFailed);
  CHECK(code_of([&] { inverse_power_update(x, 5, 2); }) == ErrorCode::PrecisionTooLow);
}

TEST_CASE("lift preconditions") {
  CHECK(code_of([] { newton_lift_root(FpPoly{{2, 0, 1}}, FactoredOrder(4), 2, 3); }) == ErrorCode::BadInput);
  CHECK(code_of([] { newton_lift_root(FpPoly{{1, 0, 1}}, FactoredOrder(5), 2, 19); }) == ErrorCode::NotAFactor);
  CHECK(code_of([] { newton_lift_root(FpPoly{{1, 0, 1}}, FactoredOrder(12), 2, 3); }) == ErrorCode::NotCoprime);
}

TEST_CASE("quadratic convergence and oracle agreement") {
  struct Case {
    u64 p, s;
    unsigned n;
  };
  for (const auto& c : {Case{3, 8, 5}, Case{3, 104, 4}, Case{19, 5, 5}, Case{5, 24, 5}, Case{7, 9, 3}, Case{3, 13, 5}}) {
    CAPTURE(c.s);
    Rng rng(c.s);
    const FactoredOrder s(c.s);
    const FpPoly fbar = build_root_of_unity(c.p, s, rng).modulus();
    unsigned steps = 0;
    LiftOptions options;
    options.on_step = [&](unsigned i, const RingElement& alpha) {
      ++steps;
      CHECK(alpha.parent().ctx().precision() == (1u << i));
      CHECK(ring_pow(alpha, c.s).is_one());
    };
    const LiftResult r = newton_lift_root(fbar, s, c.n, c.p, options);
    CHECK(steps == c.n);
    // primitive
    for (const auto& f : s.factors()) CHECK_FALSE(ring_pow(r.alpha, c.s / f.prime).is_one());

    const PadicCtx ctx(c.p, 1u << c.n);
    const ZPoly fast = expand_lifted_factor(r);
    const ZPoly slow = hensel_factor_oracle(zpoly_binomial(c.s, ctx.modulus()), fbar, ctx);
    CHECK(fast == slow);
    // exact division of X^s - 1
    CHECK(zpoly_divmod_monic(zpoly_binomial(c.s, ctx.modulus()), fast, ctx.modulus()).second.empty());
    // and of Phi_s
    CHECK(zpoly_divmod_monic(phi_mod(c.s, ctx.modulus()), fast, ctx.modulus()).second.empty());
  }
}

TEST_CASE("factor independent of the chosen lift of fbar") {
  Rng rng(1);
  const FactoredOrder s(104);
  const FpPoly fbar = build_root_of_unity(3, s, rng).modulus();
  const PadicCtx ctx(3, 16);
  const ZPoly reference = expand_lifted_factor(newton_lift_root(fbar, s, 4, 3));
  for (int t = 0; t < 3; ++t) {
    std::vector<BigInt> F;
    for (std::size_t i = 0; i < fbar.coeffs.size(); ++i) {
      BigInt shift = i + 1 < fbar.coeffs.size() ? BigInt(static_cast<unsigned long>(3 * rng.uniform(1000))) : BigInt(0);
      F.push_back(BigInt(static_cast<unsigned long>(fbar.coeffs[i])) + shift);
    }
    const LiftResult r = newton_lift_root(ExtensionDescriptor(ctx, F), s, 4);
    CHECK(expand_lifted_factor(r) == reference);
  }
}

TEST_CASE("factor ring presents the same transform root") {
  const LiftResult r = newton_lift_root(FpPoly{{1, 5, 1}}, FactoredOrder(5), 2, 19);
  const LiftResult g = factor_ring(r);
  CHECK(g.descriptor.modulus() == expand_lifted_factor(r));
  CHECK(ring_pow(g.alpha, 5).is_one());
}

TEST_CASE("linear hensel step") {
  const PadicCtx ctx(19, 3);
  const ZPoly h{1, 1, 1, 1, 1}, f{1, 5, 1}, g{1, 15, 1};
  FpPolyRing fp{PrimeField(19)};
  const auto bez = fp.ext_gcd(FpPoly{{1, 5, 1}}, FpPoly{{1, 15, 1}});
  const ZPoly a = zpoly_lift(bez.s), b = zpoly_lift(bez.t);
  const auto step = linear_hensel_step(h, f, g, a, b, 1, ctx);
  const ZPoly f2 = zpoly_add(f, step.delta_f, BigInt(361));
  const ZPoly g2 = zpoly_add(g, step.delta_g, BigInt(361));
  CHECK(f2 == ZPoly{1, 43, 1});
  CHECK(zpoly_sub(h, zpoly_mul(f2, g2, BigInt(361)), BigInt(361)).empty());
  CHECK(zpoly_degree(step.delta_f) < 2);

  // exact product gives zero corrections
  const ZPoly fg = zpoly_mul(f2, g2, BigInt(361));
  const auto zero = linear_hensel_step(fg, f2, g2, a, b, 1, PadicCtx(19, 2));
  CHECK(zero.delta_f.empty());
  CHECK(zero.delta_g.empty());

  CHECK(code_of([&] { linear_hensel_step(h, f, g, a, a, 1, ctx); }) == ErrorCode::BezoutFailure);
  CHECK(code_of([&] { linear_hensel_step(h, f, g, a, b, 2, ctx); }) == ErrorCode::PreconditionFailed);
}

TEST_CASE("oracle preconditions") {
  const PadicCtx ctx(3, 4);
  // X^2 + 1 divides (X^2 + 1)^2 with a repeated factor
  CHECK(code_of([&] { hensel_factor_oracle(ZPoly{1, 0, 2, 0, 1}, FpPoly{{1, 0, 1}}, ctx); }) ==
        ErrorCode::NotCoprimeFactors);
  CHECK(code_of([&] { hensel_factor_oracle(ZPoly{1, 1, 1}, FpPoly{{1, 0, 1}}, ctx); }) == ErrorCode::NotAFactor);
  CHECK(hensel_factor_oracle(zpoly_binomial(4, BigInt(6561)), FpPoly{{1, 0, 1}}, PadicCtx(3, 8)) == ZPoly{1, 0, 1});
}
