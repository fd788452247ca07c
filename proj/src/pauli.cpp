#include "ce/pauli.hpp"

#include <array>

namespace ce {

PauliOperator PauliOperator::identity(int n) {
  if (n < 1 || n > QubitMask::capacity) {
    throw std::invalid_argument("qubit count out of range");
  }
  return PauliOperator{n, {}, {}, 0};
}

PauliOperator PauliOperator::single(int n, int q, Pauli kind) {
  PauliOperator p = identity(n);
  if (q < 0 || q >= n) {
    throw std::out_of_range("qubit index out of range");
  }
  p.set_kind(q, kind);
  return p;
}

Pauli PauliOperator::kind_at(int q) const {
  const int code = (x.test(q) ? 1 : 0) | (z.test(q) ? 2 : 0);
  switch (code) {
    case 1:
      return Pauli::X;
    case 2:
      return Pauli::Z;
    case 3:
      return Pauli::Y;
    default:
      return Pauli::I;
  }
}

void PauliOperator::set_kind(int q, Pauli kind) {
  if (x.test(q)) x.flip(q);
  if (z.test(q)) z.flip(q);
  if (kind == Pauli::X || kind == Pauli::Y) x.set(q);
  if (kind == Pauli::Z || kind == Pauli::Y) z.set(q);
}

std::string PauliOperator::str() const {
  static const char* prefix[4] = {"", "i", "-", "-i"};
  std::string out = prefix[phase_exp & 3];
  out.reserve(out.size() + static_cast<size_t>(n));
  for (int q = 0; q < n; ++q) {
    out += "IXYZ"[static_cast<int>(kind_at(q))];
  }
  return out;
}

PauliOperator parse_pauli(std::string_view text, int sign) {
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("sign must be +1 or -1");
  }
  size_t pos = 0;
  int phase = sign == -1 ? 2 : 0;

  // UTF-8 minus sign U+2212.
  auto minus_at = [&](size_t i) {
    return i + 3 <= text.size() &&
           static_cast<unsigned char>(text[i]) == 0xE2 &&
           static_cast<unsigned char>(text[i + 1]) == 0x88 &&
           static_cast<unsigned char>(text[i + 2]) == 0x92;
  };
  if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
    if (text[pos] == '-') phase += 2;
    ++pos;
  } else if (minus_at(pos)) {
    phase += 2;
    pos += 3;
  }
  if (pos < text.size() && text[pos] == 'i' && pos + 1 < text.size()) {
    phase += 1;
    ++pos;
  }

  const size_t start = pos;
  const size_t count = text.size() - start;
  if (count == 0) {
    throw PauliParseError("empty Pauli string", pos);
  }
  if (count > static_cast<size_t>(QubitMask::capacity)) {
    throw PauliParseError("Pauli string longer than 128 qubits", pos);
  }
  PauliOperator p = PauliOperator::identity(static_cast<int>(count));
  p.phase_exp = phase & 3;
  for (size_t i = start; i < text.size(); ++i) {
    const int q = static_cast<int>(i - start);
    switch (text[i]) {
      case 'I':
        break;
      case 'X':
        p.x.set(q);
        break;
      case 'Y':
        p.x.set(q);
        p.z.set(q);
        break;
      case 'Z':
        p.z.set(q);
        break;
      default:
        throw PauliParseError(
            "invalid Pauli symbol '" + std::string(1, text[i]) +
                "' at position " + std::to_string(i),
            i);
    }
  }
  return p;
}

PauliOperator multiply(const PauliOperator& p, const PauliOperator& q) {
  if (p.n != q.n) {
    throw std::invalid_argument("Pauli size mismatch");
  }
  PauliOperator r;
  r.n = p.n;
  r.x = p.x ^ q.x;
  r.z = p.z ^ q.z;
  // Rewrite each factor as i^{|x&z|} X^x Z^z, commute the Z part of p past
  // the X part of q (a -1 per overlap), then convert back.
  int phase = p.phase_exp + q.phase_exp;
  phase += (p.x & p.z).popcount();
  phase += (q.x & q.z).popcount();
  phase += 2 * (p.z & q.x).popcount();
  phase -= (r.x & r.z).popcount();
  r.phase_exp = ((phase % 4) + 4) & 3;
  return r;
}

bool commutes(const PauliOperator& p, const PauliOperator& q) {
  if (p.n != q.n) {
    throw std::invalid_argument("Pauli size mismatch");
  }
  return (((p.x & q.z).popcount() + (p.z & q.x).popcount()) & 1) == 0;
}

int weight(const PauliOperator& p) { return (p.x | p.z).popcount(); }

}  // namespace ce
