#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "padicfft/integer_math.hpp"
#include "padicfft/op_counter.hpp"
#include "padicfft/polynomial.hpp"
#include "padicfft/random.hpp"

namespace padicfft {

/// F_p for an odd or even prime p < 2^32.
class PrimeField {
 public:
  using Elem = u64;

  explicit PrimeField(u64 p);

  u64 characteristic() const { return p_; }
  unsigned degree() const { return 1; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(u64 v) const { return v % p_; }
  Elem from_signed(long long v) const;

  Elem add(Elem a, Elem b) const {
    const u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p_ - b; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem mul(Elem a, Elem b) const { return a * b % p_; }
  Elem inv(Elem a) const;

  bool is_zero(Elem a) const { return a == 0; }
  bool equal(Elem a, Elem b) const { return a == b; }
  std::optional<u64> to_prime(Elem a) const { return a; }
  Elem random(Rng& rng) const { return rng.uniform(p_); }

 private:
  u64 p_;
};

using FpPoly = Poly<PrimeField>;
using FpPolyRing = PolyRing<PrimeField>;

/// Element of F_p[Y]/f: exactly deg f coefficients, Y^0 first.
struct FFElem {
  std::vector<u64> coeffs;

  friend bool operator==(const FFElem&, const FFElem&) = default;
};

/// The field F_p[Y]/f for a monic irreducible f.
///
/// F_p itself is presented as F_p[Y]/(Y - 1), so that the generator Y is the
/// primitive first root of unity. Copies share the immutable modulus data.
class FField {
 public:
  using Elem = FFElem;

  /// Certifies irreducibility of `modulus` (Rabin's Frobenius test) and
  /// throws BadInput if it fails or the modulus is not monic.
  FField(u64 p, const FpPoly& modulus, OpCounter* counter = nullptr);

  static FField prime(u64 p, OpCounter* counter = nullptr);

  u64 characteristic() const { return data_->base.characteristic(); }
  unsigned degree() const { return data_->degree; }
  const FpPoly& modulus() const { return data_->modulus; }
  const PrimeField& base() const { return data_->base; }
  OpCounter* counter() const { return counter_; }

  /// Same field, different instrumentation handle.
  FField with_counter(OpCounter* counter) const {
    FField copy = *this;
    copy.counter_ = counter;
    return copy;
  }

  Elem zero() const { return {std::vector<u64>(degree(), 0)}; }
  Elem one() const { return from_int(1); }
  Elem from_int(u64 v) const;
  /// The class of Y.
  Elem gen() const;
  Elem from_poly(const FpPoly& a) const;
  FpPoly to_poly(const Elem& a) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  /// Schoolbook product reduced by the modulus; counts deg^2 plus the
  /// reduction products against nonzero modulus coefficients.
  Elem mul(const Elem& a, const Elem& b) const;
  Elem inv(const Elem& a) const;
  Elem pow(const Elem& a, const BigInt& e) const { return field_pow(*this, a, e); }
  Elem frobenius(const Elem& a) const { return pow(a, BigInt(characteristic())); }

  bool is_zero(const Elem& a) const;
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  std::optional<u64> to_prime(const Elem& a) const;
  Elem random(Rng& rng) const;

  /// p^degree, the field size.
  BigInt order() const { return big_pow(characteristic(), degree()); }

  std::string to_string(const Elem& a) const;

 private:
  struct Data {
    PrimeField base;
    FpPoly modulus;
    unsigned degree;
    std::vector<std::pair<unsigned, u64>> neg_tail;  // (j, -f_j) for nonzero f_j, j < degree
  };
  FField(std::shared_ptr<const Data> data, OpCounter* counter) : data_(std::move(data)), counter_(counter) {}

  std::shared_ptr<const Data> data_;
  OpCounter* counter_ = nullptr;
};

using FFPoly = Poly<FField>;
using FFPolyRing = PolyRing<FField>;

/// Rabin's test: Y^(p^n) = Y mod f and gcd(Y^(p^(n/q)) - Y, f) = 1 for each
/// prime q | n, where n = deg f.
bool is_irreducible(const FpPoly& f, u64 p);

/// Field presented as Base[X]/g for a monic irreducible g over Base.
///
/// Used transiently while climbing the cyclotomic tower; irreducibility of g
/// is the caller's responsibility.
template <class Base>
class QuotientField {
 public:
  using Elem = Poly<Base>;

  QuotientField(Base base, Poly<Base> modulus) : ring_(std::move(base)), modulus_(std::move(modulus)) {
    require(ring_.degree(modulus_) >= 1, ErrorCode::BadInput, "quotient modulus must be nonconstant");
    modulus_ = ring_.monic(modulus_);
  }

  const PolyRing<Base>& ring() const { return ring_; }
  const Base& base() const { return ring_.field(); }
  const Poly<Base>& modulus() const { return modulus_; }

  u64 characteristic() const { return base().characteristic(); }
  unsigned degree() const { return base().degree() * static_cast<unsigned>(ring_.degree(modulus_)); }

  Elem zero() const { return {}; }
  Elem one() const { return ring_.rem(ring_.one(), modulus_); }
  Elem from_int(u64 v) const { return ring_.constant(base().from_int(v)); }
  Elem gen() const { return ring_.rem(ring_.x(), modulus_); }
  Elem embed(const typename Base::Elem& c) const { return ring_.constant(c); }

  Elem add(const Elem& a, const Elem& b) const { return ring_.add(a, b); }
  Elem sub(const Elem& a, const Elem& b) const { return ring_.sub(a, b); }
  Elem neg(const Elem& a) const { return ring_.neg(a); }
  Elem mul(const Elem& a, const Elem& b) const { return ring_.mulmod(a, b, modulus_); }
  Elem inv(const Elem& a) const {
    auto bez = ring_.ext_gcd(a, modulus_);
    require(ring_.is_one(bez.gcd), ErrorCode::NonUnit, "quotient field: element not invertible");
    return ring_.rem(bez.s, modulus_);
  }

  bool is_zero(const Elem& a) const { return ring_.is_zero(a); }
  bool equal(const Elem& a, const Elem& b) const { return ring_.equal(a, b); }
  std::optional<u64> to_prime(const Elem& a) const {
    if (ring_.is_zero(a)) return u64{0};
    if (ring_.degree(a) > 0) return std::nullopt;
    return base().to_prime(a.coeffs[0]);
  }
  Elem random(Rng& rng) const {
    Elem r;
    for (long i = 0; i < ring_.degree(modulus_); ++i) r.coeffs.push_back(base().random(rng));
    ring_.trim(r);
    return r;
  }

 private:
  PolyRing<Base> ring_;
  Poly<Base> modulus_;
};

/// [beta, beta^p, beta^(p^2), ...] up to (not including) the first repeat of
/// beta. Throws OrbitNotClosed if the orbit exceeds the field degree.
template <class Field>
std::vector<typename Field::Elem> frobenius_orbit(const Field& field, const typename Field::Elem& beta) {
  const BigInt p(field.characteristic());
  std::vector<typename Field::Elem> orbit{beta};
  auto next = field_pow(field, beta, p);
  while (!field.equal(next, beta)) {
    require(orbit.size() < field.degree(), ErrorCode::OrbitNotClosed, "Frobenius orbit did not close within the field degree");
    orbit.push_back(next);
    next = field_pow(field, next, p);
  }
  return orbit;
}

/// prod_j (Y - beta^(p^j)) over the Frobenius orbit, mapped down to F_p[Y].
template <class Field>
FpPoly minimal_poly_from_orbit(const Field& field, const typename Field::Elem& beta) {
  const auto orbit = frobenius_orbit(field, beta);
  PolyRing<Field> ring(field);
  auto product = ring.one();
  for (const auto& root : orbit) {
    product = ring.mul(product, Poly<Field>{{field.neg(root), field.one()}});
  }
  PrimeField fp(field.characteristic());
  FpPoly result;
  for (const auto& c : product.coeffs) {
    auto v = field.to_prime(c);
    require(v.has_value(), ErrorCode::OrbitNotClosed, "orbit product has a coefficient outside F_p");
    result.coeffs.push_back(*v);
  }
  return result;
}

/// Readable form "Y^2 + 5*Y + 1" of a polynomial over F_p (or its integer lift).
std::string poly_to_string(const std::vector<BigInt>& coeffs, char var = 'X');
std::string poly_to_string(const FpPoly& f, char var = 'X');

}  // namespace padicfft
