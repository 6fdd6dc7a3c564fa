#include <cmath>

#include "doctest.h"
#include "padicfft/error.hpp"
#include "padicfft/planner.hpp"
#include "../support/oracles.hpp"

using namespace padicfft;

TEST_CASE("planner examples") {
  auto a = choose_parameters(3, 1);
  CHECK(a.r == 1);
  CHECK(a.s == 8);
  CHECK(a.d == 2);
  auto b = choose_parameters(3, 100);
  CHECK(b.r == 2);
  CHECK(b.s == 104);
  CHECK(b.d == 6);
  CHECK(b.predicted_mults == 71136);
  auto c = choose_parameters(3, 10000);
  CHECK(c.r == 3);
  CHECK(c.s == 12584);
  CHECK(c.d == 30);
  CHECK(factorization_string(c.s_factored) == "2^3 * 11^2 * 13");
  CHECK(choose_parameters(5, 1).s == 24);
  CHECK(choose_parameters(5, 24).s == 744);
}

TEST_CASE("predicted cost formula") {
  CHECK(predicted_cost(8, 2) == 192);
  CHECK(predicted_cost(104, 6) == 71136);
  CHECK(predicted_cost(2, 1) == 4);
}

TEST_CASE("planner invariants over a log-spaced sweep") {
  for (u64 p : {3ull, 5ull, 7ull}) {
    for (double x = 0; x <= 5.0001; x += 0.25) {
      const u64 n = static_cast<u64>(std::llround(std::pow(10.0, x)));
      const auto r = choose_parameters(p, n);
      CAPTURE(p);
      CAPTURE(n);
      CHECK(r.s > n);
      CHECK(r.s % p != 0);
      CHECK(r.d == oracle::order(p, r.s));
      CHECK(r.d_matches_product);
      // minimality: dropping the last factor leaves s <= N
      u64 prefix = p - 1;
      u64 q = 2;
      for (unsigned i = 1; i < r.r; ++q) {
        if (!oracle::is_prime(q)) continue;
        prefix *= cyclotomic_value_at(q, p).get_ui();
        ++i;
      }
      if (r.r > 1) CHECK(prefix <= n);
      u64 product = 1;
      for (const auto& f : r.s_factored.factors()) {
        for (unsigned i = 0; i < f.exponent; ++i) product *= f.prime;
      }
      CHECK(product == r.s);
    }
  }
}

TEST_CASE("report rows") {
  const auto rows = asymptotic_report(3, {100, 10000});
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].s_over_n == doctest::Approx(1.04));
  CHECK(rows[1].s_over_n == doctest::Approx(1.2584));
  const std::string csv = render_report_csv(rows);
  CHECK(csv.find("3,100,2,104,6,1.040000,71136,") != std::string::npos);
  const std::string table = render_report_table(rows);
  CHECK(table.find("12584") != std::string::npos);
}

TEST_CASE("planner preconditions") {
  CHECK_THROWS_AS(choose_parameters(2, 10), Error);
  CHECK_THROWS_AS(choose_parameters(9, 10), Error);
  CHECK_THROWS_AS(choose_parameters(3, 0), Error);
  CHECK_THROWS_AS(choose_parameters(3, u64{1} << 62), Error);
}
