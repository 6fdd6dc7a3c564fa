#include "padicfft/padic_ring.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "padicfft/cyclotomic.hpp"
#include "padicfft/error.hpp"

namespace padicfft {

PadicCtx::PadicCtx(u64 p, unsigned precision) : p_(p), precision_(precision) {
  require(p >= 3, ErrorCode::EvenPrime, "p must be an odd prime");
  require(p < (u64{1} << 32), ErrorCode::OutOfRange, "p must be below 2^32");
  require(is_prime_u64(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  require(precision >= 1, ErrorCode::BadInput, "precision K must be >= 1");
  modulus_ = std::make_shared<const BigInt>(big_pow(p, precision));
}

ResidueInt PadicCtx::reduce(const BigInt& x) const {
  ResidueInt r;
  mpz_mod(r.get_mpz_t(), x.get_mpz_t(), modulus().get_mpz_t());
  return r;
}

ResidueInt residue_inverse(const BigInt& u, const PadicCtx& ctx) {
  const u64 p = ctx.prime();
  const u64 u_mod_p = mpz_fdiv_ui(u.get_mpz_t(), p);
  require(u_mod_p != 0, ErrorCode::NonUnit, "residue is divisible by p");
  BigInt w(static_cast<unsigned long>(PrimeField(p).inv(u_mod_p)));
  for (unsigned digits = 1; digits < ctx.precision();) {
    digits = std::min(2 * digits, ctx.precision());
    const BigInt m = big_pow(p, digits);
    BigInt uw = u * w;
    uw %= m;
    w = w * (2 - uw);
    mpz_mod(w.get_mpz_t(), w.get_mpz_t(), m.get_mpz_t());
  }
  return ctx.reduce(w);
}

namespace {

FpPoly reduce_mod_p(const std::vector<BigInt>& coeffs, u64 p) {
  FpPoly f;
  for (const auto& c : coeffs) f.coeffs.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  FpPolyRing(PrimeField(p)).trim(f);
  return f;
}

}  // namespace

ExtensionDescriptor::ExtensionDescriptor(const PadicCtx& ctx, std::vector<BigInt> modulus) {
  require(modulus.size() >= 2, ErrorCode::BadInput, "modulus must have degree >= 1");
  for (auto& c : modulus) c = ctx.reduce(c);
  require(modulus.back() == 1, ErrorCode::BadInput, "modulus must be monic");
  const unsigned degree = static_cast<unsigned>(modulus.size() - 1);
  const FpPoly fbar = reduce_mod_p(modulus, ctx.prime());
  FField residue(ctx.prime(), fbar);  // certifies irreducibility mod p
  const auto nonzeros = static_cast<std::size_t>(
      std::count_if(modulus.begin(), modulus.end() - 1, [](const BigInt& c) { return c != 0; }));
  data_ = std::make_shared<const Data>(Data{ctx, std::move(modulus), degree, std::move(residue), nonzeros});
}

ExtensionDescriptor ExtensionDescriptor::lift_of(const PadicCtx& ctx, const FpPoly& fbar) {
  std::vector<BigInt> modulus;
  for (u64 c : fbar.coeffs) modulus.emplace_back(static_cast<unsigned long>(c));
  return ExtensionDescriptor(ctx, std::move(modulus));
}

ExtensionDescriptor ExtensionDescriptor::with_precision(unsigned precision) const {
  if (precision == ctx().precision()) return *this;
  PadicCtx ctx2 = ctx().with_precision(precision);
  std::vector<BigInt> modulus;
  for (const auto& c : data_->modulus) modulus.push_back(ctx2.reduce(c));
  const auto nonzeros = static_cast<std::size_t>(
      std::count_if(modulus.begin(), modulus.end() - 1, [](const BigInt& c) { return c != 0; }));
  return ExtensionDescriptor(std::make_shared<const Data>(
      Data{ctx2, std::move(modulus), data_->degree, data_->residue_field, nonzeros}));
}

std::uint64_t ExtensionDescriptor::mul_cost() const {
  const std::uint64_t d = degree();
  return d * d + (d - 1) * data_->tail_nonzeros;
}

bool ExtensionDescriptor::same_ring(const ExtensionDescriptor& other) const {
  if (data_ == other.data_) return true;
  return ctx() == other.ctx() && modulus() == other.modulus();
}

std::string ExtensionDescriptor::modulus_string() const { return poly_to_string(modulus(), 'X'); }

RingElement::RingElement(ExtensionDescriptor parent, std::vector<BigInt> coeffs) : parent_(std::move(parent)) {
  require(coeffs.size() <= parent_.degree(), ErrorCode::LengthMismatch, "ring element has more than d coefficients");
  coeffs.resize(parent_.degree());
  for (auto& c : coeffs) c = parent_.ctx().reduce(c);
  coeffs_ = std::move(coeffs);
}

RingElement RingElement::zero(const ExtensionDescriptor& parent) { return RingElement(parent, {}); }

RingElement RingElement::one(const ExtensionDescriptor& parent) { return constant(parent, 1); }

RingElement RingElement::constant(const ExtensionDescriptor& parent, const BigInt& c) {
  return RingElement(parent, {c});
}

RingElement RingElement::generator(const ExtensionDescriptor& parent) {
  if (parent.degree() == 1) return constant(parent, -parent.modulus()[0]);
  return RingElement(parent, {0, 1});
}

bool RingElement::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

bool RingElement::is_one() const { return coeffs_[0] == 1 && is_constant(); }

bool RingElement::is_constant() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(), [](const BigInt& c) { return c == 0; });
}

RingElement RingElement::in(const ExtensionDescriptor& target) const {
  require(target.degree() == parent_.degree() && target.ctx().prime() == parent_.ctx().prime(), ErrorCode::ParentMismatch,
          "target ring has a different shape");
  const PadicCtx common = parent_.ctx().with_precision(std::min(target.ctx().precision(), parent_.ctx().precision()));
  for (unsigned i = 0; i <= parent_.degree(); ++i) {
    require(common.reduce(target.modulus()[i]) == common.reduce(parent_.modulus()[i]), ErrorCode::ParentMismatch,
            "target ring has a different modulus");
  }
  return RingElement(target, coeffs_);
}

std::string RingElement::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) out << " + ";
    out << coeffs_[i];
    if (i == 1) out << "*X";
    if (i > 1) out << "*X^" << i;
  }
  out << " (mod " << parent_.ctx().prime() << '^' << parent_.ctx().precision() << ", " << parent_.modulus_string() << ')';
  return out.str();
}

namespace {

void check_same(const RingElement& a, const RingElement& b) {
  require(a.parent().same_ring(b.parent()), ErrorCode::ParentMismatch, "operands live in different rings");
}

}  // namespace

RingElement ring_add(const RingElement& a, const RingElement& b) {
  check_same(a, b);
  std::vector<BigInt> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs()[i] + b.coeffs()[i];
  return RingElement(a.parent(), std::move(c));
}

RingElement ring_sub(const RingElement& a, const RingElement& b) {
  check_same(a, b);
  std::vector<BigInt> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs()[i] - b.coeffs()[i];
  return RingElement(a.parent(), std::move(c));
}

RingElement ring_neg(const RingElement& a) {
  std::vector<BigInt> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = -a.coeffs()[i];
  return RingElement(a.parent(), std::move(c));
}

RingElement ring_scale(const RingElement& a, const BigInt& k) {
  std::vector<BigInt> c(a.coeffs().size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs()[i] * k;
  return RingElement(a.parent(), std::move(c));
}

RingElement ring_mul(const RingElement& a, const RingElement& b, OpCounter* counter) {
  check_same(a, b);
  const ExtensionDescriptor& parent = a.parent();
  const unsigned d = parent.degree();
  const auto& F = parent.modulus();
  std::vector<BigInt> acc(2 * d - 1);
  for (unsigned i = 0; i < d; ++i) {
    if (a.coeffs()[i] == 0) continue;
    for (unsigned j = 0; j < d; ++j) {
      mpz_addmul(acc[i + j].get_mpz_t(), a.coeffs()[i].get_mpz_t(), b.coeffs()[j].get_mpz_t());
    }
  }
  BigInt c;
  for (unsigned i = 2 * d - 1; i-- > d;) {
    mpz_mod(c.get_mpz_t(), acc[i].get_mpz_t(), parent.ctx().modulus().get_mpz_t());
    if (c == 0) continue;
    for (unsigned j = 0; j < d; ++j) {
      if (F[j] != 0) mpz_submul(acc[i - d + j].get_mpz_t(), c.get_mpz_t(), F[j].get_mpz_t());
    }
  }
  acc.resize(d);
  count_ops(counter, parent.mul_cost());
  return RingElement(parent, std::move(acc));
}

RingElement ring_pow(const RingElement& a, const BigInt& e, OpCounter* counter) {
  require(e >= 0, ErrorCode::BadInput, "negative exponent");
  RingElement result = RingElement::one(a.parent());
  for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0 && e != 0; --bit) {
    result = ring_mul(result, result, counter);
    if (mpz_tstbit(e.get_mpz_t(), bit)) result = ring_mul(result, a, counter);
  }
  return result;
}

RingElement ring_inverse_unit(const RingElement& a, OpCounter* counter) {
  const ExtensionDescriptor& parent = a.parent();
  const FField& residue = parent.residue_field();
  const u64 p = parent.ctx().prime();
  FFElem abar = residue.zero();
  for (unsigned i = 0; i < parent.degree(); ++i) abar.coeffs[i] = mpz_fdiv_ui(a.coeffs()[i].get_mpz_t(), p);
  require(!residue.is_zero(abar), ErrorCode::NonUnit, "element is divisible by p");
  const FFElem winv = residue.inv(abar);
  std::vector<BigInt> start;
  for (u64 c : winv.coeffs) start.emplace_back(static_cast<unsigned long>(c));
  RingElement w(parent, std::move(start));
  const RingElement two = RingElement::constant(parent, 2);
  for (unsigned digits = 1; digits < parent.ctx().precision(); digits *= 2) {
    w = ring_mul(w, ring_sub(two, ring_mul(a, w, counter)), counter);
  }
  return w;
}

ScaledCoefficients scale_normalize(std::span<const std::pair<long, BigInt>> coeffs, const PadicCtx& ctx) {
  const u64 p = ctx.prime();
  long min_val = std::numeric_limits<long>::max();
  for (const auto& [exponent, value] : coeffs) {
    if (value != 0) min_val = std::min(min_val, exponent + static_cast<long>(padic_valuation(value, p)));
  }
  ScaledCoefficients out;
  if (min_val == std::numeric_limits<long>::max()) {
    out.mantissas.assign(coeffs.size(), 0);
    return out;
  }
  out.exponent = min_val;
  for (const auto& [exponent, value] : coeffs) {
    if (value == 0) {
      out.mantissas.emplace_back(0);
      continue;
    }
    const unsigned v = padic_valuation(value, p);
    BigInt unit = value;
    for (unsigned i = 0; i < v; ++i) mpz_divexact_ui(unit.get_mpz_t(), unit.get_mpz_t(), p);
    const long shift = exponent + static_cast<long>(v) - min_val;
    // Digits beyond p^K are lost anyway; cap the power to keep it small.
    const unsigned capped = static_cast<unsigned>(std::min<long>(shift, ctx.precision()));
    out.mantissas.push_back(ctx.reduce(unit * big_pow(p, capped)));
  }
  return out;
}

}  // namespace padicfft
