#include "padicfft/fft.hpp"

#include <algorithm>

#include "padicfft/error.hpp"

namespace padicfft {

namespace detail {

// Flat copies of the twiddles and of -F's tail, in the representation the
// selected kernel works with.
struct KernelTables {
  bool word = false;
  unsigned d = 1;
  u64 s = 1;
  u64 m_word = 0;
  std::vector<u64> twiddles_word;  // s * d
  std::vector<std::pair<unsigned, u64>> neg_tail_word;
  BigInt m_big;
  std::vector<BigInt> twiddles_big;
  std::vector<std::pair<unsigned, BigInt>> neg_tail_big;
  std::uint64_t reduction_cost = 0;  // (d - 1) * nnz
};

}  // namespace detail

namespace {

using detail::KernelTables;

// u64 residues with u128 lazy accumulation; usable when every accumulator
// stays below 2^128 (see word_kernel_fits).
struct WordBackend {
  using Value = u64;
  using Acc = u128;
  const KernelTables& t;

  const Value* twiddle(u64 e) const { return t.twiddles_word.data() + e * t.d; }
  void clear(Acc& a) const { a = 0; }
  void add(Acc& a, const Value& v) const { a += v; }
  void mul_add(Acc& a, const Value& x, const Value& y) const { a += static_cast<u128>(x) * y; }
  void finish(std::vector<Acc>& acc, Value* out, bool reduce_high) const {
    const unsigned d = t.d;
    const u64 m = t.m_word;
    if (reduce_high) {
      for (unsigned k = 2 * d - 2; k >= d; --k) {
        const u64 c = static_cast<u64>(acc[k] % m);
        if (c == 0) continue;
        for (const auto& [j, neg] : t.neg_tail_word) acc[k - d + j] += static_cast<u128>(c) * neg;
      }
    }
    for (unsigned i = 0; i < d; ++i) out[i] = static_cast<u64>(acc[i] % m);
  }
  void scale(Value& v, const Value& k) const { v = static_cast<u64>(static_cast<u128>(v) * k % t.m_word); }
};

struct BigBackend {
  using Value = BigInt;
  using Acc = BigInt;
  const KernelTables& t;

  const Value* twiddle(u64 e) const { return t.twiddles_big.data() + e * t.d; }
  void clear(Acc& a) const { a = 0; }
  void add(Acc& a, const Value& v) const { a += v; }
  void mul_add(Acc& a, const Value& x, const Value& y) const { mpz_addmul(a.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t()); }
  void finish(std::vector<Acc>& acc, Value* out, bool reduce_high) const {
    const unsigned d = t.d;
    const mpz_srcptr m = t.m_big.get_mpz_t();
    if (reduce_high) {
      BigInt c;
      for (unsigned k = 2 * d - 2; k >= d; --k) {
        mpz_mod(c.get_mpz_t(), acc[k].get_mpz_t(), m);
        if (c == 0) continue;
        for (const auto& [j, neg] : t.neg_tail_big) mpz_addmul(acc[k - d + j].get_mpz_t(), c.get_mpz_t(), neg.get_mpz_t());
      }
    }
    for (unsigned i = 0; i < d; ++i) mpz_mod(out[i].get_mpz_t(), acc[i].get_mpz_t(), m);
  }
  void scale(Value& v, const Value& k) const {
    v *= k;
    mpz_mod(v.get_mpz_t(), v.get_mpz_t(), t.m_big.get_mpz_t());
  }
};

// One decimation-in-time pass: r blocks of length L become one block of
// length L*r, out[g*Lr + t] = sum_q in[g*Lr + q*L + t mod L] * w^(q*t).
template <class Backend>
std::uint64_t run_stage(const Backend& b, const typename Backend::Value* in, typename Backend::Value* out, u64 L, u64 r,
                        bool inverse, bool parallel) {
  const KernelTables& t = b.t;
  const unsigned d = t.d;
  const u64 s = t.s;
  const u64 block = L * r;
  const u64 step = s / block;
  const long long total = static_cast<long long>(s);
  std::uint64_t ops = 0;
#pragma omp parallel if (parallel) reduction(+ : ops)
  {
    std::vector<typename Backend::Acc> acc(2 * d - 1);
#pragma omp for schedule(static)
    for (long long o = 0; o < total; ++o) {
      const u64 g = static_cast<u64>(o) / block;
      const u64 pos = static_cast<u64>(o) % block;
      const u64 base = g * block + pos % L;
      for (auto& a : acc) b.clear(a);
      bool multiplied = false;
      for (u64 q = 0; q < r; ++q) {
        const auto* y = in + (base + q * L) * d;
        u64 e = step * q * pos % s;
        if (inverse && e != 0) e = s - e;
        if (e == 0) {
          for (unsigned i = 0; i < d; ++i) b.add(acc[i], y[i]);
          continue;
        }
        const auto* w = b.twiddle(e);
        for (unsigned i = 0; i < d; ++i) {
          for (unsigned j = 0; j < d; ++j) b.mul_add(acc[i + j], y[i], w[j]);
        }
        ops += static_cast<std::uint64_t>(d) * d;
        multiplied = true;
      }
      b.finish(acc, out + static_cast<u64>(o) * d, multiplied && d > 1);
      if (multiplied) ops += t.reduction_cost;
    }
  }
  return ops;
}

template <class Backend>
std::vector<typename Backend::Value> transform(const Backend& b, const FFTPlan& plan,
                                               std::vector<typename Backend::Value> values, bool inverse,
                                               const DftOptions& options) {
  const unsigned d = plan.degree();
  const u64 s = plan.length();
  std::vector<typename Backend::Value> work(values.size());
  for (u64 slot = 0; slot < s; ++slot) {
    const u64 src = plan.input_order[slot];
    for (unsigned i = 0; i < d; ++i) work[slot * d + i] = values[src * d + i];
  }
  values.swap(work);
  std::uint64_t ops = 0;
  u64 L = 1;
  for (u64 r : plan.radices) {
    ops += run_stage(b, values.data(), work.data(), L, r, inverse, options.parallel);
    values.swap(work);
    L *= r;
  }
  count_ops(options.counter, ops);
  return values;
}

bool word_kernel_fits(const BigInt& m, u64 max_radix, unsigned d) {
  if (mpz_sizeinbase(m.get_mpz_t(), 2) > 63) return false;
  BigInt bound = (m - 1) * (m - 1) * static_cast<unsigned long>(max_radix + 2) * static_cast<unsigned long>(d);
  return mpz_sizeinbase(bound.get_mpz_t(), 2) <= 127;
}

void check_input(const std::vector<RingElement>& v, const FFTPlan& plan) {
  require(v.size() == plan.length(), ErrorCode::LengthMismatch,
          "expected " + std::to_string(plan.length()) + " elements, got " + std::to_string(v.size()));
  for (const auto& x : v) {
    require(x.parent().same_ring(plan.ring), ErrorCode::ParentMismatch, "element is not in the plan's ring");
  }
}

std::vector<RingElement> run(const std::vector<RingElement>& input, const FFTPlan& plan, bool inverse,
                             const DftOptions& options) {
  check_input(input, plan);
  const KernelTables& t = *plan.kernel;
  const unsigned d = t.d;
  std::vector<RingElement> out;
  out.reserve(input.size());
  if (t.word) {
    WordBackend b{t};
    std::vector<u64> flat(input.size() * d);
    for (std::size_t k = 0; k < input.size(); ++k) {
      for (unsigned i = 0; i < d; ++i) flat[k * d + i] = input[k].coeffs()[i].get_ui();
    }
    flat = transform(b, plan, std::move(flat), inverse, options);
    const u64 inv_s = plan.inv_s.get_ui();
    for (std::size_t k = 0; k < input.size(); ++k) {
      std::vector<BigInt> c(d);
      for (unsigned i = 0; i < d; ++i) {
        if (inverse) b.scale(flat[k * d + i], inv_s);
        c[i] = static_cast<unsigned long>(flat[k * d + i]);
      }
      out.emplace_back(plan.ring, std::move(c));
    }
  } else {
    BigBackend b{t};
    std::vector<BigInt> flat(input.size() * d);
    for (std::size_t k = 0; k < input.size(); ++k) {
      for (unsigned i = 0; i < d; ++i) flat[k * d + i] = input[k].coeffs()[i];
    }
    flat = transform(b, plan, std::move(flat), inverse, options);
    for (std::size_t k = 0; k < input.size(); ++k) {
      std::vector<BigInt> c(flat.begin() + static_cast<long>(k * d), flat.begin() + static_cast<long>((k + 1) * d));
      if (inverse) {
        for (auto& v : c) b.scale(v, plan.inv_s);
      }
      out.emplace_back(plan.ring, std::move(c));
    }
  }
  if (inverse) count_ops(options.counter, static_cast<std::uint64_t>(input.size()) * d);
  return out;
}

}  // namespace

bool FFTPlan::uses_word_kernel() const { return kernel && kernel->word; }

FFTPlan make_plan(const FactoredOrder& s, const LiftResult& lift, unsigned precision) {
  require(precision >= 1, ErrorCode::BadInput, "precision K must be >= 1");
  require(lift.descriptor.ctx().precision() >= precision, ErrorCode::PrecisionTooLow,
          "lift carries " + std::to_string(lift.descriptor.ctx().precision()) + " digits, plan needs " +
              std::to_string(precision));
  require(s.coprime_to(lift.descriptor.ctx().prime()), ErrorCode::NotCoprime, "s must be coprime to p");

  const ExtensionDescriptor ring = lift.descriptor.with_precision(precision);
  const RingElement root = lift.alpha.in(ring);
  const u64 n = s.value();

  std::vector<RingElement> powers{RingElement::one(ring)};
  powers.reserve(n);
  for (u64 j = 1; j < n; ++j) powers.push_back(ring_mul(powers.back(), root));
  require(ring_mul(powers.back(), root).is_one(), ErrorCode::RootNotPrimitive, "alpha^s != 1");
  for (const auto& f : s.factors()) {
    require(!powers[n / f.prime].is_one(), ErrorCode::RootNotPrimitive,
            "alpha^(s/" + std::to_string(f.prime) + ") = 1");
  }

  std::vector<u64> radices = s.radices();
  std::vector<std::size_t> order(n);
  for (u64 i = 0; i < n; ++i) {
    // the last radix splits first (outermost), so it owns the most significant slot digit
    u64 pos = 0, rest = i, block = n;
    for (std::size_t k = radices.size(); k-- > 0;) {
      block /= radices[k];
      pos += (rest % radices[k]) * block;
      rest /= radices[k];
    }
    order[pos] = i;
  }

  auto tables = std::make_shared<KernelTables>();
  const unsigned d = ring.degree();
  tables->d = d;
  tables->s = n;
  const u64 max_radix = radices.empty() ? 1 : radices.back();
  tables->word = word_kernel_fits(ring.ctx().modulus(), max_radix, d);
  std::size_t nnz = 0;
  for (unsigned j = 0; j < d; ++j) {
    const BigInt& c = ring.modulus()[j];
    if (c == 0) continue;
    ++nnz;
    const BigInt neg = ring.ctx().modulus() - c;
    tables->neg_tail_big.emplace_back(j, neg);
    if (tables->word) tables->neg_tail_word.emplace_back(j, neg.get_ui());
  }
  tables->reduction_cost = static_cast<std::uint64_t>(d - 1) * nnz;
  if (tables->word) {
    tables->m_word = ring.ctx().modulus().get_ui();
    tables->twiddles_word.reserve(n * d);
    for (const auto& w : powers) {
      for (const auto& c : w.coeffs()) tables->twiddles_word.push_back(c.get_ui());
    }
  } else {
    tables->m_big = ring.ctx().modulus();
    tables->twiddles_big.reserve(n * d);
    for (const auto& w : powers) tables->twiddles_big.insert(tables->twiddles_big.end(), w.coeffs().begin(), w.coeffs().end());
  }

  return FFTPlan{s,
                 std::move(radices),
                 ring,
                 root,
                 std::move(powers),
                 residue_inverse(BigInt(static_cast<unsigned long>(n)), ring.ctx()),
                 std::move(order),
                 std::move(tables)};
}

std::vector<RingElement> dft(const std::vector<RingElement>& coeffs, const FFTPlan& plan, const DftOptions& options) {
  return run(coeffs, plan, false, options);
}

std::vector<RingElement> idft(const std::vector<RingElement>& evals, const FFTPlan& plan, const DftOptions& options) {
  return run(evals, plan, true, options);
}

std::vector<RingElement> naive_dft(const std::vector<RingElement>& coeffs, const RingElement& root, u64 s) {
  std::vector<RingElement> out;
  out.reserve(s);
  RingElement point = RingElement::one(root.parent());
  for (u64 j = 0; j < s; ++j) {
    RingElement acc = RingElement::zero(root.parent());
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = ring_mul(acc, point) + coeffs[i];
    out.push_back(std::move(acc));
    point = ring_mul(point, root);
  }
  return out;
}

std::vector<RingElement> cyclic_convolution(const std::vector<RingElement>& x, const std::vector<RingElement>& y,
                                            const FFTPlan& plan, const DftOptions& options) {
  auto fx = dft(x, plan, options);
  const auto fy = dft(y, plan, options);
  for (std::size_t i = 0; i < fx.size(); ++i) fx[i] = ring_mul(fx[i], fy[i], options.counter);
  return idft(fx, plan, options);
}

std::vector<RingElement> embed_constants(const ZPoly& coeffs, const ExtensionDescriptor& ring, std::size_t length) {
  require(coeffs.size() <= length, ErrorCode::DegreeOverflow, "polynomial longer than the transform");
  std::vector<RingElement> out;
  out.reserve(length);
  for (const auto& c : coeffs) out.push_back(RingElement::constant(ring, c));
  while (out.size() < length) out.push_back(RingElement::zero(ring));
  return out;
}

ZPoly poly_multiply(const ZPoly& f, const ZPoly& g, const FFTPlan& plan, const DftOptions& options) {
  const BigInt& m = plan.ring.ctx().modulus();
  const ZPoly a = zpoly_reduce(f, m), b = zpoly_reduce(g, m);
  if (a.empty() || b.empty()) return {};
  require(zpoly_degree(a) + zpoly_degree(b) < static_cast<long>(plan.length()), ErrorCode::DegreeOverflow,
          "deg f + deg g must be below s = " + std::to_string(plan.length()));
  const auto product = cyclic_convolution(embed_constants(a, plan.ring, plan.length()),
                                          embed_constants(b, plan.ring, plan.length()), plan, options);
  ZPoly out;
  out.reserve(product.size());
  for (const auto& c : product) {
    require(c.is_constant(), ErrorCode::CoefficientNotRational, "product coefficient left the base ring");
    out.push_back(c.coeffs()[0]);
  }
  return zpoly_reduce(std::move(out), m);
}

}  // namespace padicfft
