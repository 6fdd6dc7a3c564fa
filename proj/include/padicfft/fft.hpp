#pragma once

#include <memory>
#include <vector>

#include "padicfft/cyclotomic.hpp"
#include "padicfft/hensel.hpp"
#include "padicfft/padic_ring.hpp"
#include "padicfft/zpoly.hpp"

namespace padicfft {

namespace detail {
struct KernelTables;
}

/// Precomputed length-s transform over A = (Z/p^K)[X]/F.
struct FFTPlan {
  FactoredOrder s{1};
  std::vector<u64> radices;  // nondecreasing; radices[0] runs first
  ExtensionDescriptor ring;
  RingElement root;
  std::vector<RingElement> root_powers;  // alpha^0 .. alpha^(s-1)
  ResidueInt inv_s;
  std::vector<std::size_t> input_order;  // digit-reversal: slot -> input index
  std::shared_ptr<const detail::KernelTables> kernel;

  u64 length() const { return s.value(); }
  unsigned degree() const { return ring.degree(); }
  /// Both kernels agree bit for bit; this reports which one runs.
  bool uses_word_kernel() const;
};

/// The lift must carry at least K digits and alpha must have exact order s.
FFTPlan make_plan(const FactoredOrder& s, const LiftResult& lift, unsigned precision);

struct DftOptions {
  OpCounter* counter = nullptr;
  /// Spread each stage across OpenMP threads (when built with OpenMP).
  bool parallel = true;
};

/// [f(alpha^0), ..., f(alpha^(s-1))] in natural order.
std::vector<RingElement> dft(const std::vector<RingElement>& coeffs, const FFTPlan& plan, const DftOptions& options = {});
/// Transform with alpha^{-1}, then scale by s^{-1}.
std::vector<RingElement> idft(const std::vector<RingElement>& evals, const FFTPlan& plan,
                              const DftOptions& options = {});

/// Recursive Cooley-Tukey on RingElement arithmetic, one thread; the
/// reference the iterative kernel is tested against.
std::vector<RingElement> dft_serial(const std::vector<RingElement>& coeffs, const FFTPlan& plan,
                                    OpCounter* counter = nullptr);

/// O(s^2) Horner evaluation at root^0 .. root^(s-1).
std::vector<RingElement> naive_dft(const std::vector<RingElement>& coeffs, const RingElement& root, u64 s);

/// Length-s cyclic convolution through the transform.
std::vector<RingElement> cyclic_convolution(const std::vector<RingElement>& x, const std::vector<RingElement>& y,
                                            const FFTPlan& plan, const DftOptions& options = {});

/// Product of two polynomials over Z/p^K; needs deg f + deg g < s.
ZPoly poly_multiply(const ZPoly& f, const ZPoly& g, const FFTPlan& plan, const DftOptions& options = {});

/// Embeds base-ring coefficients as constants, zero padded to `length`.
std::vector<RingElement> embed_constants(const ZPoly& coeffs, const ExtensionDescriptor& ring, std::size_t length);

}  // namespace padicfft
