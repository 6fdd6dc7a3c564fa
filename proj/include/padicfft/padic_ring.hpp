#pragma once

#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "padicfft/finite_field.hpp"
#include "padicfft/integer_math.hpp"
#include "padicfft/op_counter.hpp"

namespace padicfft {

/// An element of Z_p known modulo p^K: the canonical representative in [0, p^K).
using ResidueInt = BigInt;

/// Prime p, precision K (number of p-adic digits), and the cached modulus p^K.
class PadicCtx {
 public:
  /// p must be an odd prime below 2^32 and K >= 1.
  PadicCtx(u64 p, unsigned precision);

  u64 prime() const { return p_; }
  unsigned precision() const { return precision_; }
  const BigInt& modulus() const { return *modulus_; }

  /// Canonical representative of x mod p^K (x may be negative).
  ResidueInt reduce(const BigInt& x) const;
  PadicCtx with_precision(unsigned precision) const { return PadicCtx(p_, precision); }

  friend bool operator==(const PadicCtx& a, const PadicCtx& b) {
    return a.p_ == b.p_ && a.precision_ == b.precision_;
  }

 private:
  u64 p_;
  unsigned precision_;
  std::shared_ptr<const BigInt> modulus_;
};

/// u^{-1} mod p^K: invert mod p, then Newton doubling w <- w(2 - uw).
ResidueInt residue_inverse(const BigInt& u, const PadicCtx& ctx);

/// The unramified ring A = (Z/p^K)[X]/F for a monic F whose reduction mod p
/// is irreducible. Copies share immutable data.
class ExtensionDescriptor {
 public:
  /// `modulus` is F with constant term first; leading coefficient must be 1.
  /// Certifies irreducibility of F mod p.
  ExtensionDescriptor(const PadicCtx& ctx, std::vector<BigInt> modulus);

  /// F = coefficient-wise lift of fbar to representatives in [0, p).
  static ExtensionDescriptor lift_of(const PadicCtx& ctx, const FpPoly& fbar);

  const PadicCtx& ctx() const { return data_->ctx; }
  unsigned degree() const { return data_->degree; }
  const std::vector<BigInt>& modulus() const { return data_->modulus; }
  /// The residue field A/pA.
  const FField& residue_field() const { return data_->residue_field; }

  /// Same F, coefficients reduced to precision K (no re-certification).
  ExtensionDescriptor with_precision(unsigned precision) const;

  /// Base multiplications performed by one ring_mul.
  std::uint64_t mul_cost() const;

  bool same_ring(const ExtensionDescriptor& other) const;

  /// "X^2 + 1"
  std::string modulus_string() const;

 private:
  struct Data {
    PadicCtx ctx;
    std::vector<BigInt> modulus;
    unsigned degree;
    FField residue_field;
    std::size_t tail_nonzeros;
  };
  explicit ExtensionDescriptor(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

/// Residue-class polynomial of degree < d over Z/p^K.
class RingElement {
 public:
  /// Reduces every coefficient mod p^K; `coeffs` may be shorter than d but
  /// not longer.
  RingElement(ExtensionDescriptor parent, std::vector<BigInt> coeffs);

  static RingElement zero(const ExtensionDescriptor& parent);
  static RingElement one(const ExtensionDescriptor& parent);
  static RingElement constant(const ExtensionDescriptor& parent, const BigInt& c);
  /// The class of X.
  static RingElement generator(const ExtensionDescriptor& parent);

  const ExtensionDescriptor& parent() const { return parent_; }
  const std::vector<ResidueInt>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;
  /// All coefficients of X^1 .. X^{d-1} vanish.
  bool is_constant() const;

  /// The same residue class viewed in `target`, which must present the same
  /// F at precision at most this element's precision (truncation), or a
  /// higher precision when the representative is simply reinterpreted.
  RingElement in(const ExtensionDescriptor& target) const;

  /// "c0 + c1*X + ... (mod p^K, F)"
  std::string to_string() const;

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.parent_.same_ring(b.parent_) && a.coeffs_ == b.coeffs_;
  }

 private:
  ExtensionDescriptor parent_;
  std::vector<ResidueInt> coeffs_;
};

RingElement ring_add(const RingElement& a, const RingElement& b);
RingElement ring_sub(const RingElement& a, const RingElement& b);
RingElement ring_neg(const RingElement& a);
RingElement ring_scale(const RingElement& a, const BigInt& c);
/// Schoolbook product reduced by the monic modulus; O(d^2) base products.
RingElement ring_mul(const RingElement& a, const RingElement& b, OpCounter* counter = nullptr);
RingElement ring_pow(const RingElement& a, const BigInt& e, OpCounter* counter = nullptr);
/// Inverse of a unit: residue-field inverse, then Newton doubling.
RingElement ring_inverse_unit(const RingElement& a, OpCounter* counter = nullptr);

inline RingElement operator+(const RingElement& a, const RingElement& b) { return ring_add(a, b); }
inline RingElement operator-(const RingElement& a, const RingElement& b) { return ring_sub(a, b); }
inline RingElement operator-(const RingElement& a) { return ring_neg(a); }
inline RingElement operator*(const RingElement& a, const RingElement& b) { return ring_mul(a, b); }

/// p^exponent * mantissa.
struct ScaledElement {
  long exponent = 0;
  RingElement mantissa;
};

struct ScaledCoefficients {
  long exponent = 0;
  std::vector<ResidueInt> mantissas;
};

/// Factors the minimum valuation out of a batch of p^e * c values, so the
/// mantissas are p-adic integers modulo p^K.
ScaledCoefficients scale_normalize(std::span<const std::pair<long, BigInt>> coeffs, const PadicCtx& ctx);

}  // namespace padicfft
