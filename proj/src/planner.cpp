#include "padicfft/planner.hpp"

#include <cmath>
#include <iomanip>
#include <map>
#include <sstream>

#include "padicfft/error.hpp"

namespace padicfft {

BigInt cyclotomic_value_at(u64 q, u64 p) {
  if (q == 1) return BigInt(static_cast<unsigned long>(p - 1));
  require(is_prime_u64(q), ErrorCode::NotPrime, "cyclotomic index must be 1 or a prime");
  return (big_pow(p, static_cast<unsigned>(q)) - 1) / static_cast<unsigned long>(p - 1);
}

BigInt predicted_cost(u64 s, u64 d) {
  const FactoredOrder f(s);
  BigInt cost(static_cast<unsigned long>(d));
  cost *= cost;
  cost *= static_cast<unsigned long>(s);
  cost *= static_cast<unsigned long>(f.weighted_prime_sum());
  return cost;
}

BigInt predicted_cost(const PlannerResult& result) {
  BigInt cost(static_cast<unsigned long>(result.d));
  cost *= cost;
  cost *= static_cast<unsigned long>(result.s);
  cost *= static_cast<unsigned long>(result.s_factored.weighted_prime_sum());
  return cost;
}

PlannerResult choose_parameters(u64 p, u64 n) {
  require(p >= 3, ErrorCode::EvenPrime, "p must be an odd prime");
  require(is_prime_u64(p), ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  require(n >= 1, ErrorCode::ZeroInput, "N must be >= 1");

  const BigInt limit = BigInt(1) << 62;
  BigInt s = cyclotomic_value_at(1, p);
  std::map<u64, unsigned> exponents;
  auto absorb = [&](const BigInt& value) {
    require(value < limit, ErrorCode::OutOfRange, "s exceeds 2^62");
    for (const auto& [q, e] : factorize(value.get_ui())) exponents[q] += e;
  };
  absorb(s);

  PlannerResult result;
  result.p = p;
  result.n = n;
  result.prime_product = 1;
  const BigInt target(static_cast<unsigned long>(n));
  for (u64 q = 2; s <= target || result.r == 0; ++q) {
    if (!is_prime_u64(q)) continue;
    const BigInt phi = cyclotomic_value_at(q, p);
    s *= phi;
    require(s < limit, ErrorCode::OutOfRange, "s exceeds 2^62");
    absorb(phi);
    ++result.r;
    result.prime_product *= q;
  }

  result.s = s.get_ui();
  std::vector<PrimePower> factors;
  for (const auto& [q, e] : exponents) factors.push_back({q, e});
  result.s_factored = FactoredOrder(result.s, std::move(factors));
  result.d = multiplicative_order(p, result.s);
  result.d_matches_product = result.d == result.prime_product;
  result.predicted_mults = predicted_cost(result);
  return result;
}

std::vector<ReportRow> asymptotic_report(u64 p, const std::vector<u64>& ns) {
  std::vector<ReportRow> rows;
  for (u64 n : ns) {
    ReportRow row;
    row.plan = choose_parameters(p, n);
    row.s_over_n = static_cast<double>(row.plan.s) / static_cast<double>(n);
    row.cost_over_n = row.plan.predicted_mults.get_d() / static_cast<double>(n);
    const double weight = static_cast<double>(row.plan.s_factored.weighted_prime_sum());
    row.small_degree = static_cast<double>(row.plan.d) < std::sqrt(static_cast<double>(row.plan.s) / weight);
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string factorization_string(const FactoredOrder& s) {
  if (s.factors().empty()) return "1";
  std::string out;
  for (const auto& f : s.factors()) {
    if (!out.empty()) out += " * ";
    out += std::to_string(f.prime);
    if (f.exponent > 1) out += "^" + std::to_string(f.exponent);
  }
  return out;
}

std::string render_report_table(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << std::setw(10) << "N" << std::setw(4) << "r" << std::setw(14) << "s" << std::setw(6) << "d" << std::setw(10)
      << "s/N" << std::setw(18) << "cost" << std::setw(14) << "cost/N" << "  small_d\n";
  for (const auto& row : rows) {
    out << std::setw(10) << row.plan.n << std::setw(4) << row.plan.r << std::setw(14) << row.plan.s << std::setw(6)
        << row.plan.d << std::setw(10) << std::fixed << std::setprecision(4) << row.s_over_n << std::setw(18)
        << row.plan.predicted_mults.get_str() << std::setw(14) << std::setprecision(1) << row.cost_over_n << "  "
        << (row.small_degree ? "yes" : "no") << "\n";
  }
  return out.str();
}

std::string render_report_csv(const std::vector<ReportRow>& rows) {
  std::ostringstream out;
  out << "p,N,r,s,d,s_over_N,predicted_mults,cost_over_N,small_d,d_matches_product,measured_mults\n";
  for (const auto& row : rows) {
    out << row.plan.p << ',' << row.plan.n << ',' << row.plan.r << ',' << row.plan.s << ',' << row.plan.d << ','
        << std::fixed << std::setprecision(6) << row.s_over_n << ',' << row.plan.predicted_mults.get_str() << ','
        << std::setprecision(3) << row.cost_over_n << ',' << (row.small_degree ? 1 : 0) << ','
        << (row.plan.d_matches_product ? 1 : 0) << ',';
    if (row.measured_mults) out << *row.measured_mults;
    out << '\n';
  }
  return out.str();
}

}  // namespace padicfft
