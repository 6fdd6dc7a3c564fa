#include <span>

#include "padicfft/error.hpp"
#include "padicfft/fft.hpp"

namespace padicfft {

namespace {

// DFT of x (length N) at the powers of alpha^(s/N). The last radix splits
// x into r interleaved subsequences.
std::vector<RingElement> recurse(const std::vector<RingElement>& x, std::span<const u64> radices, const FFTPlan& plan,
                                 OpCounter* counter) {
  const u64 n = x.size();
  if (n == 1) return x;
  const u64 r = radices.back();
  const u64 len = n / r;
  const u64 stride = plan.length() / n;

  std::vector<std::vector<RingElement>> subs;
  subs.reserve(r);
  for (u64 q = 0; q < r; ++q) {
    std::vector<RingElement> part;
    part.reserve(len);
    for (u64 i = q; i < n; i += r) part.push_back(x[i]);
    subs.push_back(recurse(part, radices.first(radices.size() - 1), plan, counter));
  }

  std::vector<RingElement> out;
  out.reserve(n);
  for (u64 t = 0; t < n; ++t) {
    RingElement acc = subs[0][t % len];
    for (u64 q = 1; q < r; ++q) {
      const u64 e = stride * ((q * t) % n);
      const RingElement& y = subs[q][t % len];
      acc = e == 0 ? acc + y : acc + ring_mul(y, plan.root_powers[e], counter);
    }
    out.push_back(std::move(acc));
  }
  return out;
}

}  // namespace

std::vector<RingElement> dft_serial(const std::vector<RingElement>& coeffs, const FFTPlan& plan, OpCounter* counter) {
  require(coeffs.size() == plan.length(), ErrorCode::LengthMismatch,
          "expected " + std::to_string(plan.length()) + " elements, got " + std::to_string(coeffs.size()));
  return recurse(coeffs, plan.radices, plan, counter);
}

}  // namespace padicfft
