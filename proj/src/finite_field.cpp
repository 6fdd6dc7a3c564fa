#include "padicfft/finite_field.hpp"

#include <sstream>

namespace padicfft {

PrimeField::PrimeField(u64 p) : p_(p) {
  require(p < (u64{1} << 32), ErrorCode::OutOfRange, "prime field characteristic must be < 2^32");
  require(is_prime_u64(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
}

PrimeField::Elem PrimeField::from_signed(long long v) const {
  const long long m = static_cast<long long>(p_);
  long long r = v % m;
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  require(a % p_ != 0, ErrorCode::NonUnit, "zero has no inverse in F_p");
  return pow_mod(a, p_ - 2, p_);
}

bool is_irreducible(const FpPoly& f, u64 p) {
  FpPolyRing ring{PrimeField(p)};
  const long n = ring.degree(f);
  if (n < 1) return false;
  if (n == 1) return true;
  const FpPoly fm = ring.monic(f);
  const FpPoly y = ring.x();
  const BigInt bp(p);
  // frob[k] = Y^(p^k) mod f
  std::vector<FpPoly> frob{ring.rem(y, fm)};
  for (long k = 1; k <= n; ++k) frob.push_back(ring.powmod(frob.back(), bp, fm));
  if (!ring.equal(frob[static_cast<std::size_t>(n)], ring.rem(y, fm))) return false;
  for (const auto& [q, e] : factorize(static_cast<u64>(n))) {
    (void)e;
    const FpPoly diff = ring.sub(frob[static_cast<std::size_t>(n / static_cast<long>(q))], y);
    if (!ring.is_one(ring.gcd(diff, fm))) return false;
  }
  return true;
}

FField::FField(u64 p, const FpPoly& modulus, OpCounter* counter) : counter_(counter) {
  PrimeField base(p);
  FpPolyRing ring(base);
  require(ring.degree(modulus) >= 1, ErrorCode::BadInput, "field modulus must have degree >= 1");
  require(ring.leading(modulus) == 1, ErrorCode::BadInput, "field modulus must be monic");
  require(is_irreducible(modulus, p), ErrorCode::BadInput,
          "field modulus " + poly_to_string(modulus, 'Y') + " is reducible over F_" + std::to_string(p));
  auto data = std::make_shared<Data>(Data{base, modulus, static_cast<unsigned>(ring.degree(modulus)), {}});
  for (unsigned j = 0; j < data->degree; ++j) {
    if (modulus.coeffs[j] != 0) data->neg_tail.emplace_back(j, base.neg(modulus.coeffs[j]));
  }
  data_ = std::move(data);
}

FField FField::prime(u64 p, OpCounter* counter) {
  PrimeField base(p);
  return FField(p, FpPoly{{base.neg(1), 1}}, counter);
}

FFElem FField::from_int(u64 v) const {
  FFElem r = zero();
  r.coeffs[0] = v % characteristic();
  return r;
}

FFElem FField::gen() const {
  if (degree() == 1) return from_int(base().neg(modulus().coeffs[0]));
  FFElem r = zero();
  r.coeffs[1] = 1;
  return r;
}

FFElem FField::from_poly(const FpPoly& a) const {
  FpPolyRing ring(base());
  const FpPoly r = ring.rem(a, modulus());
  FFElem out = zero();
  std::copy(r.coeffs.begin(), r.coeffs.end(), out.coeffs.begin());
  return out;
}

FpPoly FField::to_poly(const FFElem& a) const {
  FpPoly r{a.coeffs};
  FpPolyRing(base()).trim(r);
  return r;
}

FFElem FField::add(const FFElem& a, const FFElem& b) const {
  FFElem r = a;
  for (unsigned i = 0; i < degree(); ++i) r.coeffs[i] = base().add(a.coeffs[i], b.coeffs[i]);
  return r;
}

FFElem FField::sub(const FFElem& a, const FFElem& b) const {
  FFElem r = a;
  for (unsigned i = 0; i < degree(); ++i) r.coeffs[i] = base().sub(a.coeffs[i], b.coeffs[i]);
  return r;
}

FFElem FField::neg(const FFElem& a) const {
  FFElem r = a;
  for (auto& c : r.coeffs) c = base().neg(c);
  return r;
}

FFElem FField::mul(const FFElem& a, const FFElem& b) const {
  const unsigned d = degree();
  const u64 p = characteristic();
  std::vector<u128> acc(2 * d - 1, 0);
  for (unsigned i = 0; i < d; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (unsigned j = 0; j < d; ++j) acc[i + j] += static_cast<u128>(a.coeffs[i]) * b.coeffs[j];
  }
  // Each accumulator holds at most 2d products below p^2 < 2^64.
  for (unsigned i = 2 * d - 1; i-- > d;) {
    const u64 c = static_cast<u64>(acc[i] % p);
    if (c == 0) continue;
    for (const auto& [j, neg_fj] : data_->neg_tail) acc[i - d + j] += static_cast<u128>(c) * neg_fj;
  }
  FFElem r;
  r.coeffs.resize(d);
  for (unsigned i = 0; i < d; ++i) r.coeffs[i] = static_cast<u64>(acc[i] % p);
  count_ops(counter_, static_cast<std::uint64_t>(d) * d + static_cast<std::uint64_t>(d - 1) * data_->neg_tail.size());
  return r;
}

FFElem FField::inv(const FFElem& a) const {
  require(!is_zero(a), ErrorCode::NonUnit, "zero has no inverse");
  FpPolyRing ring(base());
  auto bez = ring.ext_gcd(to_poly(a), modulus());
  require(ring.is_one(bez.gcd), ErrorCode::InternalInvariant, "field modulus is not irreducible");
  return from_poly(bez.s);
}

bool FField::is_zero(const FFElem& a) const {
  for (u64 c : a.coeffs) {
    if (c != 0) return false;
  }
  return true;
}

std::optional<u64> FField::to_prime(const FFElem& a) const {
  for (unsigned i = 1; i < degree(); ++i) {
    if (a.coeffs[i] != 0) return std::nullopt;
  }
  return a.coeffs[0];
}

FFElem FField::random(Rng& rng) const {
  FFElem r = zero();
  for (auto& c : r.coeffs) c = rng.uniform(characteristic());
  return r;
}

std::string FField::to_string(const FFElem& a) const {
  return poly_to_string(to_poly(a), 'Y');
}

std::string poly_to_string(const std::vector<BigInt>& coeffs, char var) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    if (coeffs[i] == 0) continue;
    if (!first) out << " + ";
    first = false;
    const bool unit = coeffs[i] == 1;
    if (i == 0) {
      out << coeffs[i];
    } else {
      if (!unit) out << coeffs[i] << '*';
      out << var;
      if (i > 1) out << '^' << i;
    }
  }
  if (first) out << '0';
  return out.str();
}

std::string poly_to_string(const FpPoly& f, char var) {
  std::vector<BigInt> big;
  for (u64 c : f.coeffs) big.emplace_back(static_cast<unsigned long>(c));
  return poly_to_string(big, var);
}

}  // namespace padicfft
