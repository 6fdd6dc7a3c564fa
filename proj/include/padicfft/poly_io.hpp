#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "padicfft/zpoly.hpp"

namespace padicfft {

/// p^exp * sum c_i Y^i over Z/p^K.
///
///   p K
///   exp
///   c_0
///   c_1
///   ...
///
/// Coefficients lie in [0, p^K); trailing zero coefficients are not written.
struct PolyFile {
  u64 p = 0;
  unsigned precision = 0;
  long exponent = 0;
  ZPoly coeffs;
};

/// s ring elements of d coefficients each, written element by element with
/// the d inner coefficients (X^0 first) consecutive:
///
///   s d
///   exp
///   e_0[0] ... e_0[d-1] e_1[0] ...   (one per line)
struct EvalFile {
  u64 s = 0;
  unsigned degree = 0;
  long exponent = 0;
  std::vector<std::vector<BigInt>> elements;
};

PolyFile read_poly_file(std::istream& in);
void write_poly_file(std::ostream& out, const PolyFile& file);
EvalFile read_eval_file(std::istream& in);
void write_eval_file(std::ostream& out, const EvalFile& file);

PolyFile load_poly_file(const std::string& path);
void save_poly_file(const std::string& path, const PolyFile& file);
EvalFile load_eval_file(const std::string& path);
void save_eval_file(const std::string& path, const EvalFile& file);

}  // namespace padicfft
