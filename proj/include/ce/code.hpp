#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "ce/pauli.hpp"

namespace ce {

// Parity checks of the classical [2^r, 2^r-(r+1), 4] extended Hamming code.
// Row bit m set means position m is in the check's support.
struct CheckMatrix {
  int r = 0;
  std::vector<uint64_t> rows;

  int block_size() const { return 1 << r; }
};

struct StabilizerCode {
  int n = 0;
  int k = 0;
  int r = 0;  // family parameter; -1 when not a family instance
  int claimed_distance = 3;
  std::vector<PauliOperator> generators;
  std::vector<PauliOperator> logical_x;
  std::vector<PauliOperator> logical_z;

  std::string id() const {
    return "[[" + std::to_string(n) + "," + std::to_string(k) + "," +
           std::to_string(claimed_distance) + "]]";
  }
};

// Row 0 supports the top half {2^(r-1), ..., 2^r - 1}; row i (1 <= i <= r)
// supports the positions whose bit (r-i) is clear. Requires 2 <= r <= 6.
CheckMatrix extended_hamming_checks(int r);

// Concatenation of the extended Hamming checks with the two-qubit inner code
// whose stabilizer is -ZZ: check i becomes the product over its support of
// X_m Z_{2^r-1-m} X_{m+2^r}, followed by the 2^r signed pair checks
// -Z_m Z_{m+2^r}. Logical operator pairs are derived and canonicalized.
StabilizerCode build_ce_code(int r);

// Completes the stabilizer span to a full symplectic basis and returns k
// logical (X, Z) pairs, each reduced to its canonical coset representative.
// Deterministic given the generator list. Throws if the generators do not
// commute or are dependent.
std::pair<std::vector<PauliOperator>, std::vector<PauliOperator>>
derive_logical_operators(const StabilizerCode& code);

// The [[8,1,3]] instance with its published generator strings and logical
// operators as golden constants.
StabilizerCode canonical_code_8_1_3();

}  // namespace ce
