#include "ce/code_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace ce {

std::string format_code_file(const StabilizerCode& code) {
  std::ostringstream out;
  out << code.n << ' ' << code.k << ' ' << code.r << '\n';
  for (const auto& g : code.generators) out << g.str() << '\n';
  for (const auto& l : code.logical_x) out << l.str() << '\n';
  for (const auto& l : code.logical_z) out << l.str() << '\n';
  return out.str();
}

StabilizerCode parse_code_file(const std::string& text) {
  std::istringstream in(text);
  StabilizerCode code;
  std::string header;
  if (!std::getline(in, header)) {
    throw std::runtime_error("code file: missing header");
  }
  std::istringstream hs(header);
  if (!(hs >> code.n >> code.k >> code.r)) {
    throw std::runtime_error("code file: header must be \"n k r\"");
  }
  if (code.n < 1 || code.n > QubitMask::capacity || code.k < 0 ||
      code.k >= code.n) {
    throw std::runtime_error("code file: implausible parameters");
  }
  auto next_op = [&](const char* what) {
    std::string line;
    while (std::getline(in, line)) {
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      PauliOperator p = parse_pauli(line);
      if (p.n != code.n) {
        throw std::runtime_error(std::string("code file: ") + what +
                                 " has wrong length: " + line);
      }
      return p;
    }
    throw std::runtime_error(std::string("code file: missing ") + what);
  };
  for (int i = 0; i < code.n - code.k; ++i) {
    code.generators.push_back(next_op("generator"));
  }
  for (int i = 0; i < code.k; ++i) {
    code.logical_x.push_back(next_op("logical X"));
  }
  for (int i = 0; i < code.k; ++i) {
    code.logical_z.push_back(next_op("logical Z"));
  }
  return code;
}

void write_code_file(const StabilizerCode& code, const std::string& path) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out << format_code_file(code);
    if (!out.good()) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

StabilizerCode read_code_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_code_file(buf.str());
}

}  // namespace ce
