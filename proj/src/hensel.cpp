#include "padicfft/hensel.hpp"

#include <bit>

#include "padicfft/error.hpp"

namespace padicfft {

unsigned doublings_for(unsigned precision) {
  require(precision >= 1, ErrorCode::BadInput, "precision K must be >= 1");
  return static_cast<unsigned>(std::bit_width(precision - 1));
}

LiftResult newton_lift_root(const ExtensionDescriptor& lift, const FactoredOrder& s, unsigned n,
                            const LiftOptions& options) {
  const u64 p = lift.ctx().prime();
  require(s.coprime_to(p), ErrorCode::NotCoprime, "s must be coprime to p");
  require(n <= 30, ErrorCode::OutOfRange, "at most 30 doublings");
  const FField& residue = lift.residue_field();
  const BigInt s_big(static_cast<unsigned long>(s.value()));
  require(residue.equal(residue.pow(residue.gen(), s_big), residue.one()), ErrorCode::NotAFactor,
          "F mod p does not divide X^s - 1");

  ExtensionDescriptor ring = lift.with_precision(1);
  RingElement alpha = RingElement::generator(ring);
  for (unsigned i = 1; i <= n; ++i) {
    ring = lift.with_precision(1u << i);
    const RingElement a = alpha.in(ring);
    const RingElement as = ring_pow(a, s_big, options.counter);
    const RingElement correction =
        ring_mul(ring_mul(as - RingElement::one(ring), a, options.counter), RingElement::constant(ring, 2) - as,
                 options.counter);
    alpha = a - ring_scale(correction, residue_inverse(s_big, ring.ctx()));
    count_ops(options.counter, ring.degree());
    if (options.on_step) options.on_step(i, alpha);
  }
  require(ring_pow(alpha, s_big).is_one(), ErrorCode::InternalInvariant, "lifted root does not satisfy alpha^s = 1");
  return LiftResult{ring, alpha, n, s.value()};
}

LiftResult newton_lift_root(const FpPoly& fbar, const FactoredOrder& s, unsigned n, u64 p, const LiftOptions& options) {
  require(n <= 30, ErrorCode::OutOfRange, "at most 30 doublings");
  return newton_lift_root(ExtensionDescriptor::lift_of(PadicCtx(p, 1u << n), fbar), s, n, options);
}

RingElement inverse_power_update(const RingElement& alpha, u64 s, unsigned k, OpCounter* counter) {
  require(k >= 1, ErrorCode::BadInput, "k must be >= 1");
  const ExtensionDescriptor& parent = alpha.parent();
  require(parent.ctx().precision() >= 2 * k, ErrorCode::PrecisionTooLow, "element carries fewer than 2k digits");
  const ExtensionDescriptor ring = parent.with_precision(2 * k);
  const RingElement a = alpha.in(ring);
  const RingElement as = ring_pow(a, BigInt(static_cast<unsigned long>(s)), counter);
  const PadicCtx low = ring.ctx().with_precision(k);
  const RingElement defect = as - RingElement::one(ring);
  for (const auto& c : defect.coeffs()) {
    require(low.reduce(c) == 0, ErrorCode::PreconditionFailed, "alpha^s is not 1 mod p^k");
  }
  return ring_mul(a, RingElement::constant(ring, 2) - as, counter);
}

ZPoly expand_lifted_factor(const LiftResult& result, OpCounter* counter) {
  const ExtensionDescriptor& ring = result.descriptor;
  const BigInt p(static_cast<unsigned long>(ring.ctx().prime()));
  std::vector<RingElement> product{RingElement::one(ring)};
  RingElement root = result.alpha;
  for (unsigned j = 0; j < ring.degree(); ++j) {
    // product *= (Y - root)
    std::vector<RingElement> next(product.size() + 1, RingElement::zero(ring));
    for (std::size_t i = 0; i < product.size(); ++i) {
      next[i + 1] = next[i + 1] + product[i];
      next[i] = next[i] - ring_mul(root, product[i], counter);
    }
    product = std::move(next);
    root = ring_pow(root, p, counter);
  }
  require(root == result.alpha, ErrorCode::OrbitNotClosed, "Frobenius orbit of alpha does not close after d steps");

  ZPoly factor;
  for (const auto& c : product) {
    require(c.is_constant(), ErrorCode::CoefficientNotRational, "lifted factor has a coefficient outside Z/p^K");
    factor.push_back(c.coeffs()[0]);
  }
  return factor;
}

LiftResult factor_ring(const LiftResult& result, OpCounter* counter) {
  ExtensionDescriptor ring(result.descriptor.ctx(), expand_lifted_factor(result, counter));
  RingElement alpha = RingElement::generator(ring);
  return LiftResult{ring, alpha, result.n, result.s};
}

HenselCorrection linear_hensel_step(const ZPoly& h, const ZPoly& f, const ZPoly& g, const ZPoly& a, const ZPoly& b,
                                    unsigned k, const PadicCtx& ctx) {
  require(k >= 1 && k < ctx.precision(), ErrorCode::PreconditionFailed, "need 1 <= k < K");
  const u64 p = ctx.prime();
  const BigInt pk = big_pow(p, k);
  const BigInt next = pk * p;
  const BigInt pb(static_cast<unsigned long>(p));

  const ZPoly bezout = zpoly_sub(zpoly_add(zpoly_mul(a, f, pb), zpoly_mul(b, g, pb), pb), ZPoly{1}, pb);
  require(bezout.empty(), ErrorCode::BezoutFailure, "af + bg is not 1 mod p");

  const ZPoly defect = zpoly_sub(h, zpoly_mul(f, g, next), next);
  for (const auto& c : defect) {
    require(mpz_divisible_p(c.get_mpz_t(), pk.get_mpz_t()) != 0, ErrorCode::PreconditionFailed, "h is not fg mod p^k");
  }
  return HenselCorrection{zpoly_divmod_monic(zpoly_mul(b, defect, next), f, next).second,
                          zpoly_divmod_monic(zpoly_mul(a, defect, next), g, next).second};
}

ZPoly hensel_factor_oracle(const ZPoly& h, const FpPoly& fbar, const PadicCtx& ctx) {
  const u64 p = ctx.prime();
  FpPolyRing fp(PrimeField{p});
  require(!fbar.coeffs.empty() && fbar.coeffs.back() == 1, ErrorCode::BadInput, "fbar must be monic");
  const FpPoly hbar = zpoly_mod_p(h, p);
  require(!h.empty() && ctx.reduce(h.back()) == 1, ErrorCode::BadInput, "h must be monic");
  const auto [gbar, remainder] = fp.divmod(hbar, fbar);
  require(fp.is_zero(remainder), ErrorCode::NotAFactor, "fbar does not divide h mod p");
  const auto bez = fp.ext_gcd(fbar, gbar);
  require(fp.is_one(bez.gcd), ErrorCode::NotCoprimeFactors, "fbar and h/fbar share a factor mod p");

  const ZPoly a = zpoly_lift(bez.s), b = zpoly_lift(bez.t);
  ZPoly f = zpoly_lift(fbar), g = zpoly_lift(gbar);
  for (unsigned k = 1; k < ctx.precision(); ++k) {
    const BigInt next = big_pow(p, k + 1);
    const auto step = linear_hensel_step(h, f, g, a, b, k, ctx);
    f = zpoly_add(f, step.delta_f, next);
    g = zpoly_add(g, step.delta_g, next);
  }
  return zpoly_reduce(f, ctx.modulus());
}

}  // namespace padicfft
