#pragma once

#include <string>
#include <vector>

#include "padicfft/cyclotomic.hpp"
#include "padicfft/finite_field.hpp"
#include "padicfft/op_counter.hpp"
#include "padicfft/random.hpp"

namespace padicfft {

/// Cantor-Zassenhaus equal-degree splitting over F_q, q odd.
///
/// `f` must be monic, squarefree, and a product of deg(f)/e irreducible
/// factors of degree e. Each round draws a random monic g with
/// 0 < deg g < deg f, and keeps the smaller of the two pieces cut out by
/// gcd(g, f) or gcd(g^((q^e - 1)/2) - 1, f) until one factor remains.
FFPoly cz_split(const FField& field, const FFPoly& f, unsigned e, Rng& rng);

/// F = F_p(zeta_order) = F_p[Y]/f together with a primitive order-th root.
struct TowerState {
  FField field;
  u64 order = 1;
  FFElem zeta;
};

/// How one prime-power step of the tower was taken.
struct TowerStep {
  enum class Method { Split, Irreducible, Binomial };
  u64 prime = 0;
  unsigned level = 0;  // j in zeta_{prime^j}
  u64 step_degree = 0;
  Method method = Method::Split;
};

struct RootOfUnity {
  TowerState state;  // zeta is the class of Y
  std::vector<TowerStep> steps;

  const FpPoly& modulus() const { return state.field.modulus(); }
};

/// Irreducible factor f of Phi_s over F_p with zeta = Y primitive of order s.
///
/// Adjoins each prime power p_i^{v_i} in turn: CZ on Phi_{p_i}, then CZ on
/// X^{p_i} - zeta_{p_i^{j-1}} while the exact step degree allows it, or one
/// binomial quotient once every remaining step has degree p_i, and finally
/// rebases to F_p[Y]/minpoly(zeta_a * zeta_{p_i^{v_i}}).
RootOfUnity build_root_of_unity(u64 p, const FactoredOrder& s, Rng& rng, OpCounter* counter = nullptr);

/// zeta^s = 1 and zeta^(s/q) != 1 for every prime q | s.
bool is_primitive_root(const FField& field, const FFElem& zeta, const FactoredOrder& s);

}  // namespace padicfft
