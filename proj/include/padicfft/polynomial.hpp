#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "padicfft/error.hpp"
#include "padicfft/integer_math.hpp"
#include "padicfft/random.hpp"

namespace padicfft {

/// Dense univariate polynomial, constant term first. The zero polynomial has
/// no coefficients; otherwise the last coefficient is nonzero.
template <class Field>
struct Poly {
  std::vector<typename Field::Elem> coeffs;

  friend bool operator==(const Poly&, const Poly&) = default;
};

/// x^e in a field by left-to-right square-and-multiply.
template <class Field>
typename Field::Elem field_pow(const Field& field, const typename Field::Elem& x, const BigInt& e) {
  auto result = field.one();
  for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
    result = field.mul(result, result);
    if (mpz_tstbit(e.get_mpz_t(), bit)) result = field.mul(result, x);
  }
  return result;
}

/// Polynomial arithmetic over a field type providing
/// zero/one/add/sub/neg/mul/inv/is_zero/equal/random.
template <class Field>
class PolyRing {
 public:
  using Elem = typename Field::Elem;
  using P = Poly<Field>;

  explicit PolyRing(Field field) : field_(std::move(field)) {}

  const Field& field() const { return field_; }

  P zero() const { return {}; }
  P one() const { return constant(field_.one()); }
  P constant(const Elem& c) const {
    P r{{c}};
    trim(r);
    return r;
  }
  P monomial(const Elem& c, std::size_t degree) const {
    P r;
    r.coeffs.assign(degree + 1, field_.zero());
    r.coeffs[degree] = c;
    trim(r);
    return r;
  }
  P x() const { return monomial(field_.one(), 1); }

  /// -1 for the zero polynomial.
  long degree(const P& a) const { return static_cast<long>(a.coeffs.size()) - 1; }
  bool is_zero(const P& a) const { return a.coeffs.empty(); }
  bool is_one(const P& a) const { return a.coeffs.size() == 1 && field_.equal(a.coeffs[0], field_.one()); }
  const Elem& leading(const P& a) const { return a.coeffs.back(); }

  void trim(P& a) const {
    while (!a.coeffs.empty() && field_.is_zero(a.coeffs.back())) a.coeffs.pop_back();
  }

  P add(const P& a, const P& b) const {
    P r;
    r.coeffs.resize(std::max(a.coeffs.size(), b.coeffs.size()), field_.zero());
    for (std::size_t i = 0; i < r.coeffs.size(); ++i) {
      if (i < a.coeffs.size() && i < b.coeffs.size()) {
        r.coeffs[i] = field_.add(a.coeffs[i], b.coeffs[i]);
      } else {
        r.coeffs[i] = i < a.coeffs.size() ? a.coeffs[i] : b.coeffs[i];
      }
    }
    trim(r);
    return r;
  }

  P neg(const P& a) const {
    P r = a;
    for (auto& c : r.coeffs) c = field_.neg(c);
    return r;
  }

  P sub(const P& a, const P& b) const { return add(a, neg(b)); }

  P scale(const P& a, const Elem& c) const {
    P r = a;
    for (auto& x : r.coeffs) x = field_.mul(x, c);
    trim(r);
    return r;
  }

  P mul(const P& a, const P& b) const {
    if (is_zero(a) || is_zero(b)) return {};
    P r;
    r.coeffs.assign(a.coeffs.size() + b.coeffs.size() - 1, field_.zero());
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
      if (field_.is_zero(a.coeffs[i])) continue;
      for (std::size_t j = 0; j < b.coeffs.size(); ++j) {
        r.coeffs[i + j] = field_.add(r.coeffs[i + j], field_.mul(a.coeffs[i], b.coeffs[j]));
      }
    }
    trim(r);
    return r;
  }

  std::pair<P, P> divmod(const P& a, const P& b) const {
    require(!is_zero(b), ErrorCode::ZeroInput, "polynomial division by zero");
    P rem = a;
    if (degree(a) < degree(b)) return {P{}, rem};
    const std::size_t db = b.coeffs.size() - 1;
    const Elem lead_inv = field_.inv(leading(b));
    P quo;
    quo.coeffs.assign(a.coeffs.size() - db, field_.zero());
    for (std::size_t i = a.coeffs.size(); i-- > db;) {
      if (field_.is_zero(rem.coeffs[i])) continue;
      const Elem c = field_.mul(rem.coeffs[i], lead_inv);
      quo.coeffs[i - db] = c;
      for (std::size_t j = 0; j <= db; ++j) {
        rem.coeffs[i - db + j] = field_.sub(rem.coeffs[i - db + j], field_.mul(c, b.coeffs[j]));
      }
    }
    rem.coeffs.resize(db);
    trim(rem);
    trim(quo);
    return {quo, rem};
  }

  P rem(const P& a, const P& b) const { return divmod(a, b).second; }
  P quo(const P& a, const P& b) const { return divmod(a, b).first; }

  P monic(const P& a) const {
    if (is_zero(a)) return a;
    return scale(a, field_.inv(leading(a)));
  }

  /// Monic gcd; gcd(0, 0) = 0.
  P gcd(P a, P b) const {
    while (!is_zero(b)) {
      P r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }

  struct Bezout {
    P gcd;  // monic
    P s;
    P t;    // s*a + t*b = gcd
  };

  Bezout ext_gcd(const P& a, const P& b) const {
    P r0 = a, r1 = b;
    P s0 = one(), s1 = zero();
    P t0 = zero(), t1 = one();
    while (!is_zero(r1)) {
      auto [q, r] = divmod(r0, r1);
      r0 = std::move(r1);
      r1 = std::move(r);
      P s2 = sub(s0, mul(q, s1));
      P t2 = sub(t0, mul(q, t1));
      s0 = std::move(s1);
      s1 = std::move(s2);
      t0 = std::move(t1);
      t1 = std::move(t2);
    }
    if (is_zero(r0)) return {r0, s0, t0};
    const Elem inv = field_.inv(leading(r0));
    return {scale(r0, inv), scale(s0, inv), scale(t0, inv)};
  }

  P mulmod(const P& a, const P& b, const P& m) const { return rem(mul(a, b), m); }

  /// g^e mod m by square-and-multiply, reducing after every step.
  P powmod(const P& g, const BigInt& e, const P& m) const {
    require(degree(m) >= 1, ErrorCode::BadInput, "powmod: modulus must have degree >= 1");
    P base = rem(g, m);
    P result = one();
    for (long bit = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2)) - 1; bit >= 0; --bit) {
      result = mulmod(result, result, m);
      if (mpz_tstbit(e.get_mpz_t(), bit)) result = mulmod(result, base, m);
    }
    return result;
  }

  Elem eval(const P& a, const Elem& x) const {
    Elem acc = field_.zero();
    for (std::size_t i = a.coeffs.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), a.coeffs[i]);
    return acc;
  }

  /// Uniform over all monic polynomials g with 1 <= deg g < deg_bound.
  ///
  /// Draws deg_bound uniform coefficients, rejects constants, and normalizes
  /// the leading coefficient: every monic g has exactly (q - 1) preimages.
  P random_monic(std::size_t deg_bound, Rng& rng) const {
    require(deg_bound >= 2, ErrorCode::DegreeTooSmall, "random_monic: degree bound must be >= 2");
    for (;;) {
      P g;
      g.coeffs.reserve(deg_bound);
      for (std::size_t i = 0; i < deg_bound; ++i) g.coeffs.push_back(field_.random(rng));
      trim(g);
      if (degree(g) >= 1) return monic(g);
    }
  }

  bool equal(const P& a, const P& b) const {
    if (a.coeffs.size() != b.coeffs.size()) return false;
    for (std::size_t i = 0; i < a.coeffs.size(); ++i) {
      if (!field_.equal(a.coeffs[i], b.coeffs[i])) return false;
    }
    return true;
  }

 private:
  Field field_;
};

}  // namespace padicfft
