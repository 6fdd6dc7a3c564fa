#pragma once

#include <atomic>
#include <cstdint>

namespace padicfft {

/// Tally of base-ring multiplications (in Z/p^K or F_p).
///
/// Passed by pointer to the routines that should be instrumented; a null
/// pointer disables counting. Results never depend on the tally.
class OpCounter {
 public:
  void add(std::uint64_t n) { count_.fetch_add(n, std::memory_order_relaxed); }
  std::uint64_t value() const { return count_.load(std::memory_order_relaxed); }
  void reset() { count_.store(0, std::memory_order_relaxed); }

 private:
  std::atomic<std::uint64_t> count_{0};
};

inline void count_ops(OpCounter* counter, std::uint64_t n) {
  if (counter) counter->add(n);
}

}  // namespace padicfft
