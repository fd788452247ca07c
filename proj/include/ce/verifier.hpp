#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ce/code.hpp"
#include "ce/pauli.hpp"

namespace ce {

struct BudgetExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DistanceScan {
  // Set when a minimum-weight logical was found at weight <= w_max.
  std::optional<int> distance;
  std::optional<PauliOperator> witness;
  int searched_up_to = 0;

  std::string to_label() const {
    return distance ? std::to_string(*distance)
                    : "greater than " + std::to_string(searched_up_to);
  }
};

// Minimum weight over Pauli operators that commute with every generator but
// are not stabilizer elements modulo phase. Enumerates supports in
// lexicographic order with types ordered X < Y < Z, so the witness is the
// deterministic first minimum. Enumeration is refused (never truncated) above
// 1e9 candidate patterns. w_max must be in 1..4.
DistanceScan compute_distance(const StabilizerCode& code, int w_max);

// X_{2^(r-1)-1} Z_{2^(r-1)} X_{2^(r-1)-1+2^r}; validated to commute with all
// generators of build_ce_code(r) while lying outside the stabilizer span.
PauliOperator claimed_weight3_logical(int r);

// The combined checks of the bare outer code on 2^r qubits: X on each check's
// support, Z on its mirror image.
std::vector<PauliOperator> outer_checks(const CheckMatrix& cm);

// The weight-2 operator X_{2^(r-1)-1} Z_{2^(r-1)} on 2^r qubits; validated to
// commute with every combined outer check (i.e. it is undetectable there).
PauliOperator outer_code_undetectable(int r);

// Constant-excitation check. Structurally requires every signed pair check
// -Z_m Z_{m+2^r}; each one forces odd parity on its pair, so every codeword
// component has Hamming weight 2^r. For n <= 16 the result is additionally
// cross-checked by scanning the state-vector support of all logical basis
// states. Returns 2^r.
int verify_constant_excitation(const StabilizerCode& code);

struct VerificationReport {
  std::string code_id;
  bool commutation_ok = false;
  bool independence_ok = false;
  DistanceScan distance;
  bool distance_matches_claim = false;
  bool logicals_ok = false;
  std::optional<int> excitation;  // empty = not a CE code of this family
  bool claimed_logical_ok = false;
  std::string claimed_logical;
  bool all_ok = false;
};

// Runs every structural check on a code; family-specific checks (claimed
// weight-3 logical, constant excitation) run when code.r >= 2.
VerificationReport verify_code(const StabilizerCode& code, int w_max);

}  // namespace ce
