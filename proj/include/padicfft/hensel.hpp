#pragma once

#include <functional>

#include "padicfft/cyclotomic.hpp"
#include "padicfft/padic_ring.hpp"
#include "padicfft/zpoly.hpp"

namespace padicfft {

/// A root of X^s - 1 in A = (Z/p^(2^n))[X]/F lifting the class of X.
struct LiftResult {
  ExtensionDescriptor descriptor;
  RingElement alpha;
  unsigned n = 0;
  u64 s = 1;
};

struct LiftOptions {
  OpCounter* counter = nullptr;
  /// Called after iteration i with alpha correct mod p^(2^i).
  std::function<void(unsigned i, const RingElement& alpha)> on_step;
};

/// Newton iteration alpha <- alpha - s^{-1} (alpha^s - 1) alpha (2 - alpha^s)
/// from alpha = X, step i working mod p^(2^i). F is the [0, p) lift of fbar.
LiftResult newton_lift_root(const FpPoly& fbar, const FactoredOrder& s, unsigned n, u64 p, const LiftOptions& options = {});

/// Same iteration over a caller-chosen lift F (any precision; it is
/// re-read at each step's precision). F mod p must divide X^s - 1.
LiftResult newton_lift_root(const ExtensionDescriptor& lift, const FactoredOrder& s, unsigned n,
                            const LiftOptions& options = {});

/// Smallest n with 2^n >= K.
unsigned doublings_for(unsigned precision);

/// alpha (2 - alpha^s) mod p^(2k), the inverse of alpha^(s-1) when alpha^s = 1 mod p^k.
/// The parent of `alpha` must carry at least 2k digits.
RingElement inverse_power_update(const RingElement& alpha, u64 s, unsigned k, OpCounter* counter = nullptr);

/// prod_j (Y - alpha^(p^j)), j < d, projected to Z/p^(2^n): the monic factor of
/// X^s - 1 that reduces to fbar.
ZPoly expand_lifted_factor(const LiftResult& result, OpCounter* counter = nullptr);

/// The lifted factor as a ring of its own, with alpha = X.
LiftResult factor_ring(const LiftResult& result, OpCounter* counter = nullptr);

struct HenselCorrection {
  ZPoly delta_f;
  ZPoly delta_g;
};

/// One linear step: given h = fg mod p^k and af + bg = 1 mod p, returns
/// (b(h - fg) rem f, a(h - fg) rem g) mod p^(k+1). f and g must be monic.
HenselCorrection linear_hensel_step(const ZPoly& h, const ZPoly& f, const ZPoly& g, const ZPoly& a, const ZPoly& b,
                                    unsigned k, const PadicCtx& ctx);

/// The monic factor of h over Z/p^K reducing to fbar, by K - 1 linear steps.
/// h must be monic.
ZPoly hensel_factor_oracle(const ZPoly& h, const FpPoly& fbar, const PadicCtx& ctx);

}  // namespace padicfft
