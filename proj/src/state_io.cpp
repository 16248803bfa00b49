#include "gaussify/state_io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "gaussify/error.hpp"

namespace gaussify {
namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  for (std::string tok; ss >> tok;) out.push_back(tok);
  return out;
}

template <class T>
T parse_number(const std::string& tok, int line, const char* what) {
  T value{};
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) throw ParseError(line, std::string("invalid ") + what + " '" + tok + "'");
  return value;
}

std::string shortest(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

}  // namespace

PureState2 read_state(std::istream& in) {
  std::string line;
  int lineno = 0;
  int cutoff = -1;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks.size() != 2 || toks[0] != "fock2" || toks[1].rfind("cutoff=", 0) != 0)
      throw ParseError(lineno, "expected header 'fock2 cutoff=<N>'");
    cutoff = parse_number<int>(toks[1].substr(7), lineno, "cutoff");
    if (cutoff < 0) throw ParseError(lineno, "negative cutoff");
    break;
  }
  if (cutoff < 0) throw ParseError(lineno, "missing header");

  PureState2 state(cutoff);
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = split_ws(line);
    if (toks.empty() || toks[0][0] == '#') continue;
    if (toks.size() != 4) throw ParseError(lineno, "expected 'm n re im'");
    const int m = parse_number<int>(toks[0], lineno, "index");
    const int n = parse_number<int>(toks[1], lineno, "index");
    if (m < 0 || n < 0 || m > cutoff || n > cutoff)
      throw ParseError(lineno, "index (" + toks[0] + "," + toks[1] + ") beyond cutoff " + std::to_string(cutoff));
    state(m, n) = Complex(parse_number<double>(toks[2], lineno, "real part"),
                          parse_number<double>(toks[3], lineno, "imaginary part"));
  }
  return state;
}

PureState2 read_state_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  return read_state(in);
}

void write_state(std::ostream& out, const PureState2& state) {
  out << "fock2 cutoff=" << state.cutoff() << '\n';
  for (int m = 0; m <= state.cutoff(); ++m)
    for (int n = 0; n <= state.cutoff(); ++n) {
      const Complex a = state(m, n);
      if (a == Complex(0.0)) continue;
      out << m << ' ' << n << ' ' << shortest(a.real()) << ' ' << shortest(a.imag()) << '\n';
    }
}

void write_state_file(const std::filesystem::path& path, const PureState2& state) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path.string());
  write_state(out, state);
}

}  // namespace gaussify
