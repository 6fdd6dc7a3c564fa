#include "padicfft/zpoly.hpp"

#include <algorithm>

#include "padicfft/error.hpp"

namespace padicfft {

namespace {

void trim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

}  // namespace

ZPoly zpoly_reduce(ZPoly a, const BigInt& m) {
  for (auto& c : a) mpz_mod(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  trim(a);
  return a;
}

ZPoly zpoly_add(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] += b[i];
  }
  return zpoly_reduce(std::move(r), m);
}

ZPoly zpoly_sub(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i < a.size()) r[i] += a[i];
    if (i < b.size()) r[i] -= b[i];
  }
  return zpoly_reduce(std::move(r), m);
}

ZPoly zpoly_mul(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  return zpoly_reduce(std::move(r), m);
}

std::pair<ZPoly, ZPoly> zpoly_divmod_monic(const ZPoly& a, const ZPoly& b, const BigInt& m) {
  require(!b.empty() && b.back() == 1, ErrorCode::BadInput, "divisor must be monic");
  ZPoly rem = zpoly_reduce(a, m);
  if (rem.size() < b.size()) return {ZPoly{}, rem};
  const std::size_t db = b.size() - 1;
  ZPoly quo(rem.size() - db);
  for (std::size_t i = rem.size(); i-- > db;) {
    mpz_mod(rem[i].get_mpz_t(), rem[i].get_mpz_t(), m.get_mpz_t());
    const BigInt c = rem[i];
    if (c == 0) continue;
    quo[i - db] = c;
    for (std::size_t j = 0; j <= db; ++j) mpz_submul(rem[i - db + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
  }
  rem.resize(db);
  return {zpoly_reduce(std::move(quo), m), zpoly_reduce(std::move(rem), m)};
}

long zpoly_degree(const ZPoly& a) { return static_cast<long>(a.size()) - 1; }

ZPoly zpoly_lift(const FpPoly& a) {
  ZPoly r;
  for (u64 c : a.coeffs) r.emplace_back(static_cast<unsigned long>(c));
  trim(r);
  return r;
}

FpPoly zpoly_mod_p(const ZPoly& a, u64 p) {
  FpPoly r;
  for (const auto& c : a) r.coeffs.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  FpPolyRing(PrimeField(p)).trim(r);
  return r;
}

ZPoly zpoly_binomial(std::size_t n, const BigInt& m) {
  ZPoly r(n + 1);
  r[0] = -1;
  r[n] = 1;
  return zpoly_reduce(std::move(r), m);
}

}  // namespace padicfft
