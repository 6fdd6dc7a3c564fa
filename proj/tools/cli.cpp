#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "criteria.hpp"
#include "padicfft/error.hpp"
#include "padicfft/pipeline.hpp"
#include "padicfft/poly_io.hpp"

namespace padicfft {

namespace {

enum Exit { kOk = 0, kUsage = 2, kPrecondition = 3, kInternal = 4 };

int exit_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Usage: return kUsage;
    case ErrorKind::Precondition: return kPrecondition;
    case ErrorKind::Internal: return kInternal;
  }
  return kInternal;
}

// Writes to `path`, or to `out` when no path was given.
template <class Fn>
void emit(const std::string& path, std::ostream& out, Fn&& write) {
  if (path.empty()) {
    write(out);
    return;
  }
  std::ofstream file(path, std::ios::binary);
  require(static_cast<bool>(file), ErrorCode::BadInput, "cannot open " + path + " for writing");
  write(file);
  require(static_cast<bool>(file.flush()), ErrorCode::BadInput, "write to " + path + " failed");
}

struct Flags {
  u64 p = 3;
  u64 n = 0;
  u64 s = 0;
  unsigned precision = kDefaultPrecision;
  u64 seed = kDefaultSeed;
  bool csv = false;
  std::string input, input_b, output;
  std::vector<u64> sweep{100, 1000, 10000};
};

PipelineOptions pipeline_options(const Flags& f) {
  PipelineOptions o;
  o.seed = f.seed;
  return o;
}

void cmd_plan(const Flags& f, std::ostream& out) {
  const PlannerResult r = choose_parameters(f.p, f.n);
  if (f.csv) {
    ReportRow row;
    row.plan = r;
    row.s_over_n = static_cast<double>(r.s) / static_cast<double>(r.n);
    row.cost_over_n = r.predicted_mults.get_d() / static_cast<double>(r.n);
    out << render_report_csv({row});
    return;
  }
  out << "p=" << r.p << " N=" << r.n << '\n'
      << "r=" << r.r << " s=" << r.s << " d=" << r.d << '\n'
      << "s = " << factorization_string(r.s_factored) << '\n'
      << "prime_product=" << r.prime_product << " d_matches_product=" << (r.d_matches_product ? "yes" : "no") << '\n'
      << "predicted_mults=" << r.predicted_mults.get_str() << '\n';
}

void cmd_root(const Flags& f, std::ostream& out) {
  require(f.s >= 1, ErrorCode::OutOfRange, "-s must be at least 1");
  const Pipeline pipe = build_pipeline(f.p, FactoredOrder(f.s), f.precision, pipeline_options(f));
  const BigInt& m = pipe.plan.ring.ctx().modulus();
  out << "s=" << f.s << " d=" << pipe.plan.degree() << " K=" << f.precision << '\n'
      << "f = " << poly_to_string(pipe.root.modulus()) << " (mod " << f.p << ")\n"
      << "lifted = " << poly_to_string(zpoly_reduce(expand_lifted_factor(pipe.lift), m)) << " (mod " << m.get_str()
      << ")\n"
      << "alpha = " << pipe.plan.root.to_string() << '\n';
}

void cmd_dft(const Flags& f, std::ostream& out) {
  const PolyFile in = load_poly_file(f.input);
  const u64 degree = in.coeffs.empty() ? 0 : in.coeffs.size() - 1;
  const FactoredOrder s = f.s ? FactoredOrder(f.s) : choose_parameters(in.p, std::max<u64>(degree, 1)).s_factored;
  require(s.value() > degree, ErrorCode::DegreeOverflow, "transform length must exceed the degree");
  const Pipeline pipe = build_pipeline(in.p, s, in.precision, pipeline_options(f));
  const auto evals = dft(embed_constants(in.coeffs, pipe.plan.ring, s.value()), pipe.plan);
  EvalFile file;
  file.s = s.value();
  file.degree = pipe.plan.degree();
  file.exponent = in.exponent;
  for (const auto& e : evals) {
    std::vector<BigInt> c = e.coeffs();
    c.resize(file.degree, 0);
    file.elements.push_back(std::move(c));
  }
  emit(f.output, out, [&](std::ostream& o) { write_eval_file(o, file); });
}

void cmd_idft(const Flags& f, std::ostream& out) {
  const EvalFile in = load_eval_file(f.input);
  const Pipeline pipe = build_pipeline(f.p, FactoredOrder(in.s), f.precision, pipeline_options(f));
  require(pipe.plan.degree() == in.degree, ErrorCode::ParseError,
          "file has degree " + std::to_string(in.degree) + " but the ring has degree " +
              std::to_string(pipe.plan.degree()));
  const BigInt& m = pipe.plan.ring.ctx().modulus();
  std::vector<RingElement> evals;
  for (const auto& c : in.elements) {
    for (const auto& x : c) require(x < m, ErrorCode::ParseError, "coefficient not below p^K");
    evals.emplace_back(pipe.plan.ring, c);
  }
  const auto coeffs = idft(evals, pipe.plan);
  PolyFile file;
  file.p = f.p;
  file.precision = f.precision;
  file.exponent = in.exponent;
  for (const auto& e : coeffs) {
    require(e.is_constant(), ErrorCode::CoefficientNotRational, "inverse transform is not a base-ring polynomial");
    file.coeffs.push_back(e.coeffs().empty() ? BigInt(0) : e.coeffs()[0]);
  }
  file.coeffs = zpoly_reduce(file.coeffs, m);
  emit(f.output, out, [&](std::ostream& o) { write_poly_file(o, file); });
}

void cmd_mul(const Flags& f, std::ostream& out) {
  const PolyFile a = load_poly_file(f.input);
  const PolyFile b = load_poly_file(f.input_b);
  require(a.p == b.p && a.precision == b.precision, ErrorCode::ParentMismatch, "inputs use different p or K");
  PolyFile file;
  file.p = a.p;
  file.precision = a.precision;
  file.exponent = a.exponent + b.exponent;
  file.coeffs = poly_multiply(a.coeffs, b.coeffs, a.p, a.precision, pipeline_options(f));
  emit(f.output, out, [&](std::ostream& o) { write_poly_file(o, file); });
}

void cmd_bench(const Flags& f, std::ostream& out) {
  std::vector<ReportRow> rows = asymptotic_report(f.p, f.sweep);
  Rng rng(f.seed);
  for (auto& row : rows) {
    const Pipeline pipe = build_pipeline(f.p, row.plan.s_factored, f.precision, pipeline_options(f));
    const BigInt& m = pipe.plan.ring.ctx().modulus();
    ZPoly x;
    for (u64 i = 0; i < row.plan.n; ++i) x.push_back(BigInt(static_cast<unsigned long>(rng.next())) % m);
    OpCounter ops;
    dft(embed_constants(zpoly_reduce(x, m), pipe.plan.ring, row.plan.s), pipe.plan, {&ops, true});
    row.measured_mults = ops.value();
  }
  out << render_report_csv(rows);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"p-adic FFT: planning, roots of unity, transforms and products over Z/p^K"};
  app.name("padicfft");
  app.require_subcommand(1, 1);
  Flags f;

  auto add_seed = [&](CLI::App* c) { c->add_option("--seed", f.seed, "random seed for the tower")->capture_default_str(); };
  auto add_precision = [&](CLI::App* c) {
    c->add_option("-K,--precision", f.precision, "p-adic digits")->capture_default_str()->check(CLI::Range(1u, 1u << 20));
  };

  auto* plan = app.add_subcommand("plan", "choose s and d for products of degree N");
  plan->add_option("-p", f.p, "odd prime")->required();
  plan->add_option("-N", f.n, "degree bound")->required();
  plan->add_flag("--csv", f.csv, "one CSV row instead of text");

  auto* root = app.add_subcommand("root", "build and lift a primitive s-th root of unity");
  root->add_option("-p", f.p, "odd prime")->required();
  root->add_option("-s", f.s, "order of the root")->required();
  add_precision(root);
  add_seed(root);

  auto* fwd = app.add_subcommand("dft", "transform a polynomial file into an evaluation file");
  fwd->add_option("-i,--input", f.input, "polynomial file")->required()->check(CLI::ExistingFile);
  fwd->add_option("-o,--output", f.output, "evaluation file (stdout if absent)");
  fwd->add_option("-s", f.s, "transform length (planner choice if absent)");
  add_seed(fwd);

  auto* inv = app.add_subcommand("idft", "transform an evaluation file back into a polynomial file");
  inv->add_option("-i,--input", f.input, "evaluation file")->required()->check(CLI::ExistingFile);
  inv->add_option("-o,--output", f.output, "polynomial file (stdout if absent)");
  inv->add_option("-p", f.p, "odd prime")->required();
  add_precision(inv);
  add_seed(inv);

  auto* mul = app.add_subcommand("mul", "multiply two polynomial files");
  mul->add_option("-a", f.input, "first factor")->required()->check(CLI::ExistingFile);
  mul->add_option("-b", f.input_b, "second factor")->required()->check(CLI::ExistingFile);
  mul->add_option("-o,--output", f.output, "product file (stdout if absent)");
  add_seed(mul);

  auto* self = app.add_subcommand("selftest", "run the acceptance criteria");

  auto* bench = app.add_subcommand("bench", "instrumented dft counts against the cost model, as CSV");
  bench->add_option("-p", f.p, "odd prime")->capture_default_str();
  bench->add_option("-N", f.sweep, "degree bounds to sweep")->delimiter(',')->capture_default_str();
  add_precision(bench);
  add_seed(bench);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*plan) cmd_plan(f, out);
    else if (*root) cmd_root(f, out);
    else if (*fwd) cmd_dft(f, out);
    else if (*inv) cmd_idft(f, out);
    else if (*mul) cmd_mul(f, out);
    else if (*bench) cmd_bench(f, out);
    else if (*self) return acceptance::run_suite(out) == 0 ? kOk : kInternal;
  } catch (const Error& e) {
    err << "error: " << error_code_name(e.code()) << ": " << e.what() << '\n';
    return exit_for(e.kind());
  } catch (const std::exception& e) {
    err << "error: InternalInvariant: " << e.what() << '\n';
    return kInternal;
  }
  return kOk;
}

}  // namespace padicfft
