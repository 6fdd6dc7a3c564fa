#include "padicfft/poly_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>

#include "padicfft/error.hpp"

namespace padicfft {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    if (!std::getline(in_, line)) return false;
    ++number_;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
  }
  std::string require_line(const char* what) {
    std::string line;
    require(next(line), ErrorCode::ParseError, std::string("missing ") + what);
    return line;
  }
  [[noreturn]] void bad(const std::string& why) const {
    fail(ErrorCode::ParseError, "line " + std::to_string(number_) + ": " + why);
  }
  unsigned line_number() const { return number_; }

 private:
  std::istream& in_;
  unsigned number_ = 0;
};

template <class T>
T parse_int(std::string_view text, LineReader& reader, const char* what) {
  T value{};
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    reader.bad(std::string("bad ") + what + " '" + std::string(text) + "'");
  }
  return value;
}

std::pair<std::string_view, std::string_view> split_pair(const std::string& line, LineReader& reader) {
  const auto space = line.find(' ');
  if (space == std::string::npos || line.find(' ', space + 1) != std::string::npos) {
    reader.bad("expected two integers separated by one space");
  }
  return {std::string_view(line).substr(0, space), std::string_view(line).substr(space + 1)};
}

BigInt parse_coefficient(const std::string& line, LineReader& reader) {
  if (line.empty() || line.find_first_not_of("0123456789") != std::string::npos) {
    reader.bad("coefficient must be a nonnegative decimal integer");
  }
  return BigInt(line, 10);
}

std::vector<BigInt> read_coefficients(LineReader& reader) {
  std::vector<BigInt> out;
  std::string line;
  while (reader.next(line)) {
    if (line.empty()) {
      // only a trailing blank line is tolerated
      std::string rest;
      if (reader.next(rest)) reader.bad("blank line inside the coefficient list");
      break;
    }
    out.push_back(parse_coefficient(line, reader));
  }
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  require(in.good(), ErrorCode::BadInput, "cannot open '" + path + "'");
  return in;
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  require(out.good(), ErrorCode::BadInput, "cannot write '" + path + "'");
  return out;
}

}  // namespace

PolyFile read_poly_file(std::istream& in) {
  LineReader reader(in);
  PolyFile file;
  const std::string header = reader.require_line("'p K' header");
  const auto [p_text, k_text] = split_pair(header, reader);
  file.p = parse_int<u64>(p_text, reader, "p");
  file.precision = parse_int<unsigned>(k_text, reader, "K");
  if (file.p < 3 || !is_prime_u64(file.p)) reader.bad("p must be an odd prime");
  if (file.precision == 0) reader.bad("K must be >= 1");
  file.exponent = parse_int<long>(reader.require_line("exponent"), reader, "exponent");

  const BigInt m = big_pow(file.p, file.precision);
  file.coeffs = read_coefficients(reader);
  for (const auto& c : file.coeffs) require(c < m, ErrorCode::ParseError, "coefficient " + c.get_str() + " is not below p^K");
  while (!file.coeffs.empty() && file.coeffs.back() == 0) file.coeffs.pop_back();
  return file;
}

void write_poly_file(std::ostream& out, const PolyFile& file) {
  out << file.p << ' ' << file.precision << '\n' << file.exponent << '\n';
  std::size_t len = file.coeffs.size();
  while (len > 0 && file.coeffs[len - 1] == 0) --len;
  for (std::size_t i = 0; i < len; ++i) out << file.coeffs[i].get_str() << '\n';
}

EvalFile read_eval_file(std::istream& in) {
  LineReader reader(in);
  EvalFile file;
  const std::string header = reader.require_line("'s d' header");
  const auto [s_text, d_text] = split_pair(header, reader);
  file.s = parse_int<u64>(s_text, reader, "s");
  file.degree = parse_int<unsigned>(d_text, reader, "d");
  if (file.s == 0 || file.degree == 0) reader.bad("s and d must be positive");
  file.exponent = parse_int<long>(reader.require_line("exponent"), reader, "exponent");

  const auto flat = read_coefficients(reader);
  require(flat.size() == file.s * file.degree, ErrorCode::ParseError,
          "expected s*d = " + std::to_string(file.s * file.degree) + " coefficients, found " + std::to_string(flat.size()));
  file.elements.reserve(file.s);
  for (u64 k = 0; k < file.s; ++k) {
    const auto begin = flat.begin() + static_cast<long>(k * file.degree);
    file.elements.emplace_back(begin, begin + file.degree);
  }
  return file;
}

void write_eval_file(std::ostream& out, const EvalFile& file) {
  out << file.s << ' ' << file.degree << '\n' << file.exponent << '\n';
  for (const auto& element : file.elements) {
    require(element.size() == file.degree, ErrorCode::LengthMismatch, "element has the wrong number of coefficients");
    for (const auto& c : element) out << c.get_str() << '\n';
  }
}

PolyFile load_poly_file(const std::string& path) {
  auto in = open_in(path);
  return read_poly_file(in);
}

void save_poly_file(const std::string& path, const PolyFile& file) {
  auto out = open_out(path);
  write_poly_file(out, file);
}

EvalFile load_eval_file(const std::string& path) {
  auto in = open_in(path);
  return read_eval_file(in);
}

void save_eval_file(const std::string& path, const EvalFile& file) {
  auto out = open_out(path);
  write_eval_file(out, file);
}

}  // namespace padicfft
