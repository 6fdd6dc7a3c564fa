#include <map>
#include <tuple>

#include "doctest.h"
#include "padicfft/error.hpp"
#include "padicfft/pipeline.hpp"
#include "../support/oracles.hpp"

using namespace padicfft;

namespace {

std::vector<RingElement> random_vector(Rng& rng, const ExtensionDescriptor& ring, u64 n) {
  std::vector<RingElement> v;
  const BigInt& m = ring.ctx().modulus();
  for (u64 i = 0; i < n; ++i) {
    std::vector<BigInt> c;
    for (unsigned k = 0; k < ring.degree(); ++k) {
      c.push_back(BigInt(static_cast<unsigned long>(rng.next())) * static_cast<unsigned long>(rng.next()) % m);
    }
    v.emplace_back(ring, std::move(c));
  }
  return v;
}

ZPoly random_zpoly(Rng& rng, std::size_t len, const BigInt& m) {
  ZPoly f;
  for (std::size_t i = 0; i < len; ++i) f.push_back(BigInt(static_cast<unsigned long>(rng.next())) % m);
  if (!f.empty() && f.back() == 0) f.back() = 1;
  return f;
}

const Pipeline& cached(u64 p, u64 s, unsigned K) {
  static std::map<std::tuple<u64, u64, unsigned>, Pipeline> cache;
  auto key = std::make_tuple(p, s, K);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, build_pipeline(p, FactoredOrder(s), K)).first;
  return it->second;
}

}  // namespace

TEST_CASE("the s = 4 example over Z/81") {
  const LiftResult lift = newton_lift_root(FpPoly{{1, 0, 1}}, FactoredOrder(4), 2, 3);
  const FFTPlan plan = make_plan(FactoredOrder(4), lift, 4);
  CHECK(plan.radices == std::vector<u64>{2, 2});
  const auto x = embed_constants(ZPoly{1, 1}, plan.ring, 4);
  const auto y = dft(x, plan);
  REQUIRE(y.size() == 4);
  CHECK(y[0].coeffs() == std::vector<BigInt>{2, 0});
  CHECK(y[1].coeffs() == std::vector<BigInt>{1, 1});
  CHECK(y[2].coeffs() == std::vector<BigInt>{0, 0});
  CHECK(y[3].coeffs() == std::vector<BigInt>{1, 80});
  // same values from the independent evaluator
  const oracle::IntPoly F{1, 0, 1};
  std::vector<BigInt> point{1, 0};
  for (int j = 0; j < 4; ++j) {
    CHECK(oracle::evaluate({{1, 0}, {1, 0}}, point, F, 81) == y[j].coeffs());
    point = oracle::ring_mul(point, {0, 1}, F, 81);
  }
  CHECK(idft(y, plan) == x);
}

TEST_CASE("plan shapes and checks") {
  const LiftResult lift2 = newton_lift_root(FpPoly{{1, 1}}, FactoredOrder(2), 3, 3);  // Y + 1
  const FFTPlan p2 = make_plan(FactoredOrder(2), lift2, 8);
  CHECK(p2.radices == std::vector<u64>{2});
  CHECK(p2.root_powers.size() == 2);
  CHECK(p2.root_powers[1] == RingElement::constant(p2.ring, -1));
  CHECK(cached(3, 104, 8).plan.radices == std::vector<u64>{2, 2, 2, 13});

  const LiftResult lift4 = newton_lift_root(FpPoly{{1, 0, 1}}, FactoredOrder(4), 2, 3);
  CHECK_THROWS_AS(make_plan(FactoredOrder(4), lift4, 5), Error);  // lift only has 4 digits
  try {
    make_plan(FactoredOrder(8), lift4, 4);  // X has order 4, not 8
    FAIL("expected RootNotPrimitive");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RootNotPrimitive);
  }
  try {
    make_plan(FactoredOrder(2), lift4, 4);  // X^2 = -1 != 1
    FAIL("expected RootNotPrimitive");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::RootNotPrimitive);
  }
}

TEST_CASE("edge cases") {
  const Pipeline& one = cached(3, 1, 4);
  const auto x = embed_constants(ZPoly{5}, one.plan.ring, 1);
  CHECK(dft(x, one.plan) == x);
  CHECK(idft(x, one.plan) == x);

  const Pipeline& pipe = cached(3, 8, 8);
  const auto zero = embed_constants(ZPoly{}, pipe.plan.ring, 8);
  CHECK(dft(zero, pipe.plan) == zero);
  CHECK_THROWS_AS(dft(embed_constants(ZPoly{1}, pipe.plan.ring, 7), pipe.plan), Error);

  // constant evaluations come from a constant polynomial
  std::vector<RingElement> c(8, RingElement::constant(pipe.plan.ring, 7));
  auto back = idft(c, pipe.plan);
  CHECK(back[0] == RingElement::constant(pipe.plan.ring, 7));
  for (int i = 1; i < 8; ++i) CHECK(back[i].is_zero());
}

TEST_CASE("monomials give geometric sequences") {
  const Pipeline& pipe = cached(3, 104, 8);
  for (u64 k : {0ull, 1ull, 5ull, 103ull}) {
    ZPoly mono(k + 1, 0);
    mono[k] = 1;
    const auto y = dft(embed_constants(mono, pipe.plan.ring, 104), pipe.plan);
    for (u64 j = 0; j < 104; ++j) CHECK(y[j] == pipe.plan.root_powers[(j * k) % 104]);
  }
}

TEST_CASE("round trip and naive agreement") {
  Rng rng(12);
  for (u64 p : {3ull, 19ull}) {
    for (u64 s : {2ull, 4ull, 8ull, 104ull}) {
      if (p == 19 && s == 104) continue;
      for (unsigned K : {1u, 8u, 32u}) {
        CAPTURE(p);
        CAPTURE(s);
        CAPTURE(K);
        const Pipeline& pipe = cached(p, s, K);
        const int trials = s > 50 ? 5 : 50;
        for (int t = 0; t < trials; ++t) {
          const auto x = random_vector(rng, pipe.plan.ring, s);
          const auto y = dft(x, pipe.plan);
          CHECK(y == naive_dft(x, pipe.plan.root, s));
          CHECK(idft(y, pipe.plan) == x);
        }
      }
    }
  }
}

TEST_CASE("large length round trip") {
  Rng rng(5);
  const Pipeline& pipe = cached(3, 12584, 32);
  const auto x = random_vector(rng, pipe.plan.ring, 12584);
  CHECK(idft(dft(x, pipe.plan), pipe.plan) == x);
}

TEST_CASE("parallel kernel, serial kernel and recursive reference agree") {
  Rng rng(6);
  for (unsigned K : {8u, 60u}) {  // 3^60 needs the big-integer kernel
    const Pipeline& pipe = cached(3, 104, K);
    CHECK(pipe.plan.uses_word_kernel() == (K == 8));
    const auto x = random_vector(rng, pipe.plan.ring, 104);
    OpCounter serial_ops, parallel_ops;
    const auto a = dft(x, pipe.plan, {&parallel_ops, true});
    const auto b = dft(x, pipe.plan, {&serial_ops, false});
    CHECK(a == b);
    CHECK(parallel_ops.value() == serial_ops.value());
    CHECK(dft_serial(x, pipe.plan) == a);
  }
}

TEST_CASE("big-integer and word kernels agree") {
  // same ring at 40 digits lies above the word threshold for s = 104 with d = 6
  Rng rng(3);
  const Pipeline& hi = cached(3, 104, 40);
  const Pipeline& lo = cached(3, 104, 20);
  CHECK_FALSE(hi.plan.uses_word_kernel());
  CHECK(lo.plan.uses_word_kernel());
  const auto x = random_vector(rng, hi.plan.ring, 104);
  const auto y = dft(x, hi.plan);
  std::vector<RingElement> x_lo;
  for (const auto& e : x) x_lo.push_back(e.in(lo.plan.ring));
  const auto y_lo = dft(x_lo, lo.plan);
  for (std::size_t i = 0; i < y.size(); ++i) CHECK(y[i].in(lo.plan.ring) == y_lo[i]);
}

TEST_CASE("convolution theorem and linearity") {
  Rng rng(7);
  const Pipeline& pipe = cached(3, 104, 8);
  const auto& plan = pipe.plan;
  for (int t = 0; t < 5; ++t) {
    const auto x = random_vector(rng, plan.ring, 104);
    const auto y = random_vector(rng, plan.ring, 104);
    // direct cyclic convolution
    std::vector<RingElement> direct(104, RingElement::zero(plan.ring));
    for (u64 i = 0; i < 104; ++i)
      for (u64 j = 0; j < 104; ++j) direct[(i + j) % 104] = direct[(i + j) % 104] + x[i] * y[j];
    CHECK(cyclic_convolution(x, y, plan) == direct);
    const auto fx = dft(x, plan), fy = dft(y, plan), fd = dft(direct, plan);
    for (u64 i = 0; i < 104; ++i) CHECK(fd[i] == fx[i] * fy[i]);

    const BigInt a(static_cast<unsigned long>(rng.next())), b(static_cast<unsigned long>(rng.next()));
    std::vector<RingElement> combo;
    for (u64 i = 0; i < 104; ++i) combo.push_back(ring_scale(x[i], a) + ring_scale(y[i], b));
    const auto fc = dft(combo, plan);
    for (u64 i = 0; i < 104; ++i) CHECK(fc[i] == ring_scale(fx[i], a) + ring_scale(fy[i], b));
  }
}

TEST_CASE("polynomial multiplication") {
  const Pipeline& small = cached(3, 4, 4);
  CHECK(poly_multiply(ZPoly{1, 1}, ZPoly{1, 1}, small.plan) == ZPoly{1, 2, 1});
  CHECK(poly_multiply(ZPoly{4, 0, 7}, ZPoly{1}, small.plan) == ZPoly{4, 0, 7});
  CHECK(poly_multiply(ZPoly{}, ZPoly{1, 2}, small.plan).empty());
  CHECK_THROWS_AS(poly_multiply(ZPoly{1, 1, 1}, ZPoly{1, 1, 1}, small.plan), Error);

  Rng rng(21);
  const Pipeline& pipe = cached(3, 104, 8);
  const BigInt& m = pipe.plan.ring.ctx().modulus();
  for (int t = 0; t < 20; ++t) {
    const ZPoly f = random_zpoly(rng, 41, m), g = random_zpoly(rng, 41, m);
    oracle::IntPoly fo(f.begin(), f.end()), go(g.begin(), g.end());
    const auto expect = oracle::mul(fo, go, m);
    CHECK(poly_multiply(f, g, pipe.plan) == ZPoly(expect.begin(), expect.end()));
  }
  // planner-driven entry point
  const ZPoly f = random_zpoly(rng, 30, BigInt(6561)), g = random_zpoly(rng, 50, BigInt(6561));
  oracle::IntPoly fo(f.begin(), f.end()), go(g.begin(), g.end());
  const auto expect = oracle::mul(fo, go, BigInt(6561));
  CHECK(poly_multiply(f, g, 3, 8) == ZPoly(expect.begin(), expect.end()));
}

TEST_CASE("factor-ring transform agrees up to the choice of root") {
  PipelineOptions options;
  options.expand_factor = true;
  const Pipeline expanded = build_pipeline(3, FactoredOrder(104), 8, options);
  Rng rng(2);
  const auto x = random_vector(rng, expanded.plan.ring, 104);
  CHECK(idft(dft(x, expanded.plan), expanded.plan) == x);
  CHECK(dft(x, expanded.plan) == naive_dft(x, expanded.plan.root, 104));
  const ZPoly a{1, 2, 3}, b{4, 5};
  CHECK(poly_multiply(a, b, expanded.plan) == ZPoly{4, 13, 22, 15});
}

TEST_CASE("instrumented cost stays within the model") {
  for (u64 n : {100ull, 1000ull}) {
    const PlannerResult pr = choose_parameters(3, n);
    const Pipeline pipe = build_pipeline(3, pr.s_factored, 16);
    Rng rng(n);
    OpCounter counter;
    dft(random_vector(rng, pipe.plan.ring, pr.s), pipe.plan, {&counter, true});
    CHECK(BigInt(static_cast<unsigned long>(counter.value())) <= 8 * pr.predicted_mults);
  }
}
