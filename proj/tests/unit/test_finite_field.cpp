#include "doctest.h"
#include "padicfft/error.hpp"
#include "padicfft/finite_field.hpp"
#include "../support/oracles.hpp"

using namespace padicfft;

namespace {

oracle::IntPoly to_int(const FpPoly& f) {
  oracle::IntPoly r;
  for (u64 c : f.coeffs) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

FpPoly random_monic_of_degree(Rng& rng, u64 p, unsigned n) {
  FpPoly f;
  for (unsigned i = 0; i < n; ++i) f.coeffs.push_back(rng.uniform(p));
  f.coeffs.push_back(1);
  return f;
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  PrimeField f(19);
  CHECK(f.mul(f.inv(5), 5) == 1);
  CHECK(f.from_signed(-1) == 18);
  CHECK(f.sub(3, 5) == 17);
  CHECK_THROWS_AS(PrimeField(21), Error);
  CHECK_THROWS_AS(f.inv(0), Error);
}

TEST_CASE("polynomial division and gcd over F_p") {
  FpPolyRing ring{PrimeField(19)};
  // Phi_5 = (X^2 + 5X + 1)(X^2 + 15X + 1) mod 19
  const FpPoly phi5{{1, 1, 1, 1, 1}};
  const FpPoly a{{1, 5, 1}}, b{{1, 15, 1}};
  CHECK(ring.mul(a, b) == phi5);
  auto [q, r] = ring.divmod(phi5, a);
  CHECK(q == b);
  CHECK(ring.is_zero(r));
  CHECK(ring.gcd(phi5, a) == a);
  auto bez = ring.ext_gcd(a, b);
  CHECK(ring.is_one(bez.gcd));
  CHECK(ring.is_one(ring.add(ring.mul(bez.s, a), ring.mul(bez.t, b))));
}

TEST_CASE("random monic draws cover every degree below the bound") {
  FpPolyRing ring{PrimeField(3)};
  Rng rng(1);
  std::vector<int> seen(5, 0);
  for (int t = 0; t < 2000; ++t) {
    FpPoly g = ring.random_monic(5, rng);
    REQUIRE(ring.degree(g) >= 1);
    REQUIRE(ring.degree(g) < 5);
    CHECK(g.coeffs.back() == 1);
    ++seen[static_cast<std::size_t>(ring.degree(g))];
  }
  // monic of degree k are 3^k of the 3 + 9 + 27 + 81 = 120 candidates
  CHECK(seen[4] > seen[3]);
  CHECK(seen[3] > seen[2]);
  CHECK(seen[2] > seen[1]);
  CHECK(seen[1] > 0);
  CHECK_THROWS_AS(ring.random_monic(1, rng), Error);
}

TEST_CASE("irreducibility agrees with exhaustive search") {
  Rng rng(17);
  for (u64 p : {3ull, 5ull, 7ull}) {
    for (unsigned n = 1; n <= 6; ++n) {
      for (int t = 0; t < 25; ++t) {
        FpPoly f = random_monic_of_degree(rng, p, n);
        CHECK(is_irreducible(f, p) == oracle::irreducible_small(to_int(f), p));
      }
    }
  }
  // degree 1 + 2 + 3 product: passes the bare Y^(p^n) = Y test but is reducible
  FpPolyRing ring{PrimeField(3)};
  FpPoly f = ring.mul(ring.mul(FpPoly{{1, 1}}, FpPoly{{1, 0, 1}}), FpPoly{{1, 2, 0, 1}});
  CHECK_FALSE(is_irreducible(f, 3));
}

TEST_CASE("extension field arithmetic") {
  FField F(3, FpPoly{{1, 0, 1}});  // F_9
  CHECK(F.order() == 9);
  auto y = F.gen();
  CHECK(F.equal(F.mul(y, y), F.from_int(2)));
  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    auto a = F.random(rng), b = F.random(rng);
    CHECK(F.equal(F.mul(a, b), F.mul(b, a)));
    if (!F.is_zero(a)) CHECK(F.equal(F.mul(a, F.inv(a)), F.one()));
    CHECK(F.equal(F.pow(a, 9), a));
    CHECK(F.equal(F.frobenius(F.add(a, b)), F.add(F.frobenius(a), F.frobenius(b))));
  }
  CHECK_THROWS_AS(FField(3, FpPoly{{2, 0, 1}}), Error);  // Y^2 - 1
  CHECK(F.to_string(F.add(y, F.one())) == "Y + 1");
}

TEST_CASE("F_p as a degree one field") {
  FField F = FField::prime(7);
  CHECK(F.degree() == 1);
  CHECK(F.equal(F.gen(), F.one()));
  CHECK(F.to_prime(F.from_int(12)) == 5u);
}

TEST_CASE("multiplication counter") {
  OpCounter counter;
  FField F(19, FpPoly{{1, 5, 1}}, &counter);
  F.mul(F.gen(), F.gen());
  CHECK(counter.value() == 4 + 2);
  F.with_counter(nullptr).mul(F.gen(), F.gen());
  CHECK(counter.value() == 6);
}

TEST_CASE("minimal polynomial from the Frobenius orbit") {
  // in F_{19^2} = F_19[Y]/(Y^2 + 5Y + 1), Y has minimal polynomial Y^2 + 5Y + 1
  FField F(19, FpPoly{{1, 5, 1}});
  CHECK(frobenius_orbit(F, F.gen()).size() == 2);
  CHECK(minimal_poly_from_orbit(F, F.gen()) == FpPoly{{1, 5, 1}});
  CHECK(minimal_poly_from_orbit(F, F.from_int(3)) == FpPoly{{16, 1}});
  // a quotient over a quotient: 1 + Y has order 8 in F_9, so F_9[X]/(X^2 - 1 - Y) = F_81
  FField F9(3, FpPoly{{1, 0, 1}});
  FFPolyRing ring(F9);
  FFPoly g{{F9.neg(F9.add(F9.one(), F9.gen())), F9.zero(), F9.one()}};
  QuotientField<FField> E(F9, g);
  CHECK(E.degree() == 4);
  const auto minpoly = minimal_poly_from_orbit(E, E.gen());
  CHECK(minpoly.coeffs.size() == 5);
  CHECK(is_irreducible(minpoly, 3));
}

TEST_CASE("polynomial rendering") {
  CHECK(poly_to_string(FpPoly{{1, 5, 1}}) == "X^2 + 5*X + 1");
  CHECK(poly_to_string(FpPoly{}) == "0");
  CHECK(poly_to_string(std::vector<BigInt>{0, 0, 3}, 'Y') == "3*Y^2");
}
