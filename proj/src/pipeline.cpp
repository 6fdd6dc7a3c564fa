#include "padicfft/pipeline.hpp"

#include "padicfft/error.hpp"

namespace padicfft {

Pipeline build_pipeline(u64 p, const FactoredOrder& s, unsigned precision, const PipelineOptions& options) {
  Rng rng(options.seed);
  RootOfUnity root = build_root_of_unity(p, s, rng, options.setup_counter);
  const FpPoly fbar = root.modulus();
  LiftResult lift = newton_lift_root(fbar, s, doublings_for(precision), p, LiftOptions{options.setup_counter, {}});
  if (options.expand_factor) lift = factor_ring(lift, options.setup_counter);
  FFTPlan plan = make_plan(s, lift, precision);
  return Pipeline{std::move(root), std::move(lift), std::move(plan)};
}

ZPoly poly_multiply(const ZPoly& f, const ZPoly& g, u64 p, unsigned precision, const PipelineOptions& options) {
  const PadicCtx ctx(p, precision);
  const ZPoly a = zpoly_reduce(f, ctx.modulus()), b = zpoly_reduce(g, ctx.modulus());
  if (a.empty() || b.empty()) return {};
  const u64 bound = static_cast<u64>(zpoly_degree(a) + zpoly_degree(b));
  const PlannerResult plan = choose_parameters(p, std::max<u64>(bound, 1));
  const Pipeline pipe = build_pipeline(p, plan.s_factored, precision, options);
  return poly_multiply(a, b, pipe.plan);
}

}  // namespace padicfft
