// Wall-clock comparison of the three transform paths:
//   reference  recursive RingElement Cooley-Tukey, one thread
//   serial     table-driven kernel with OpenMP disabled
//   parallel   table-driven kernel, stages spread over OpenMP threads
//
//   bench_dft [p] [K] [N...]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <vector>

#include "padicfft/pipeline.hpp"

using namespace padicfft;

namespace {

template <class Fn>
double best_of(int reps, Fn&& fn) {
  double best = 1e300;
  for (int i = 0; i < reps; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    fn();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

}  // namespace

int main(int argc, char** argv) {
  const u64 p = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 3;
  const unsigned K = argc > 2 ? static_cast<unsigned>(std::strtoul(argv[2], nullptr, 10)) : kDefaultPrecision;
  std::vector<u64> ns;
  for (int i = 3; i < argc; ++i) ns.push_back(std::strtoull(argv[i], nullptr, 10));
  if (ns.empty()) ns = {100, 1000, 10000};

  std::printf("%8s %8s %4s %6s %12s %12s %12s %8s\n", "N", "s", "d", "kernel", "reference_s", "serial_s", "parallel_s",
              "speedup");
  for (u64 n : ns) {
    const PlannerResult plan = choose_parameters(p, n);
    const Pipeline pipe = build_pipeline(p, plan.s_factored, K);
    Rng rng(n);
    std::vector<RingElement> x;
    const BigInt& m = pipe.plan.ring.ctx().modulus();
    for (u64 i = 0; i < plan.s; ++i) {
      std::vector<BigInt> c;
      for (unsigned k = 0; k < pipe.plan.degree(); ++k) c.push_back(BigInt(static_cast<unsigned long>(rng.next())) % m);
      x.emplace_back(pipe.plan.ring, std::move(c));
    }
    const int reps = plan.s > 5000 ? 1 : 3;
    std::vector<RingElement> a, b, c;
    const double t_ref = best_of(reps, [&] { a = dft_serial(x, pipe.plan); });
    const double t_ser = best_of(reps, [&] { b = dft(x, pipe.plan, {nullptr, false}); });
    const double t_par = best_of(reps, [&] { c = dft(x, pipe.plan, {nullptr, true}); });
    if (a != b || b != c) {
      std::fprintf(stderr, "transforms disagree at N=%llu\n", static_cast<unsigned long long>(n));
      return 1;
    }
    std::printf("%8llu %8llu %4llu %6s %12.4f %12.4f %12.4f %8.2f\n", static_cast<unsigned long long>(n),
                static_cast<unsigned long long>(plan.s), static_cast<unsigned long long>(plan.d),
                pipe.plan.uses_word_kernel() ? "word" : "mpz", t_ref, t_ser, t_par, t_ser / t_par);
  }
  return 0;
}
