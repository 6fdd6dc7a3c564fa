#pragma once

#include <optional>
#include <string>
#include <vector>

#include "padicfft/cyclotomic.hpp"

namespace padicfft {

/// Transform length s = Phi_1(p) Phi_2(p) Phi_3(p) ... Phi_{p_r}(p) for the
/// smallest r >= 1 with s > N, and the residue degree d = ord_s(p).
struct PlannerResult {
  u64 p = 0;
  u64 n = 0;
  unsigned r = 0;
  u64 s = 0;
  FactoredOrder s_factored{1};
  u64 d = 0;
  /// p_1 p_2 ... p_r, the expected value of d.
  u64 prime_product = 0;
  bool d_matches_product = false;
  BigInt predicted_mults;
};

PlannerResult choose_parameters(u64 p, u64 n);

/// d^2 * s * sum(v_i p_i).
BigInt predicted_cost(u64 s, u64 d);
BigInt predicted_cost(const PlannerResult& result);

/// Phi_q(p) for a prime q, i.e. (p^q - 1)/(p - 1); Phi_1(p) = p - 1.
BigInt cyclotomic_value_at(u64 q, u64 p);

struct ReportRow {
  PlannerResult plan;
  double s_over_n = 0;
  double cost_over_n = 0;
  /// d < sqrt(s / sum(v_i p_i)), the regime where the FFT core dominates.
  bool small_degree = false;
  /// Instrumented dft count, when a sweep measured one.
  std::optional<u64> measured_mults;
};

std::vector<ReportRow> asymptotic_report(u64 p, const std::vector<u64>& ns);
std::string render_report_table(const std::vector<ReportRow>& rows);
std::string render_report_csv(const std::vector<ReportRow>& rows);

/// "2^3 * 13"
std::string factorization_string(const FactoredOrder& s);

}  // namespace padicfft
