#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

#include "ce/bits.hpp"

namespace ce {

enum class Pauli : uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

// Signed n-qubit Pauli operator in binary-symplectic form.
//
// The operator is i^phase_exp * (P_0 x P_1 x ... x P_{n-1}), where qubit j
// carries X if only x.test(j), Z if only z.test(j), Y if both, I if neither.
// Phase bookkeeping uses the convention Y = i X Z, so multiplication is exact
// over the full Pauli group including {+1, -1, +i, -i} prefactors.
//
// Qubit 0 is the leftmost character of the string form.
struct PauliOperator {
  int n = 0;
  QubitMask x{};
  QubitMask z{};
  int phase_exp = 0;  // global phase i^phase_exp, in {0,1,2,3}

  static PauliOperator identity(int n);
  // Weight-1 operator `kind` acting on qubit q.
  static PauliOperator single(int n, int q, Pauli kind);

  Pauli kind_at(int q) const;
  void set_kind(int q, Pauli kind);

  bool is_identity_mask() const { return x.none() && z.none(); }

  friend bool operator==(const PauliOperator& a, const PauliOperator& b) {
    return a.n == b.n && a.x == b.x && a.z == b.z &&
           a.phase_exp == b.phase_exp;
  }

  std::string str() const;
};

// Parse error carrying the offending byte offset in the input.
struct PauliParseError : std::runtime_error {
  size_t position;
  PauliParseError(const std::string& what, size_t pos)
      : std::runtime_error(what), position(pos) {}
};

// Text form: optional sign prefix ("+", "-", "i", "+i", "-i"; a UTF-8 minus
// sign is accepted as "-") followed by symbols over {I,X,Y,Z}. `sign` = -1
// adds a global -1 on top of any prefix.
PauliOperator parse_pauli(std::string_view text, int sign = +1);

// Exact product PQ with phase tracking.
PauliOperator multiply(const PauliOperator& p, const PauliOperator& q);

// True iff the symplectic inner product vanishes; phases are irrelevant.
bool commutes(const PauliOperator& p, const PauliOperator& q);

// Number of non-identity tensor factors.
int weight(const PauliOperator& p);

}  // namespace ce
