#pragma once

#include <utility>
#include <vector>

#include "padicfft/finite_field.hpp"
#include "padicfft/integer_math.hpp"

namespace padicfft {

/// Polynomial over Z/m as residues in [0, m), constant term first, no
/// trailing zeros (the zero polynomial is empty).
using ZPoly = std::vector<BigInt>;

ZPoly zpoly_reduce(ZPoly a, const BigInt& m);
ZPoly zpoly_add(const ZPoly& a, const ZPoly& b, const BigInt& m);
ZPoly zpoly_sub(const ZPoly& a, const ZPoly& b, const BigInt& m);
ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b, const BigInt& m);
/// Division by a monic divisor; returns (quotient, remainder).
std::pair<ZPoly, ZPoly> zpoly_divmod_monic(const ZPoly& a, const ZPoly& b, const BigInt& m);
long zpoly_degree(const ZPoly& a);

/// Representatives in [0, p).
ZPoly zpoly_lift(const FpPoly& a);
FpPoly zpoly_mod_p(const ZPoly& a, u64 p);

/// X^n - 1 over Z/m.
ZPoly zpoly_binomial(std::size_t n, const BigInt& m);

}  // namespace padicfft
