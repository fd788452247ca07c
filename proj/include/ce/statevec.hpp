#pragma once

#include <array>
#include <complex>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ce/code.hpp"
#include "ce/pauli.hpp"

namespace ce {

using cd = std::complex<double>;

enum class QubitInit : uint8_t { Zero, One, Plus };

enum class GateKind : uint8_t { H, S, Sdg, T, Tdg, X, CX };

struct GateOp {
  GateKind kind;
  int target = 0;
  int control = -1;  // CX only
};

// Dense amplitude vector over n <= 16 qubits. Basis index bit (n-1-j) holds
// qubit j's value, i.e. qubit 0 is the most significant index bit, matching
// the leftmost character of Pauli strings.
class StateVector {
 public:
  explicit StateVector(int n);

  static StateVector prepare(std::span<const QubitInit> inits);
  // Product state from per-qubit amplitude pairs.
  static StateVector product(std::span<const std::array<cd, 2>> qubits);

  int n() const { return n_; }
  size_t dim() const { return amps_.size(); }
  std::span<const cd> amplitudes() const { return amps_; }
  cd& amp(size_t idx) { return amps_[idx]; }

  void apply_gate(const GateOp& gate);
  void apply_pauli(const PauliOperator& p);
  // exp(-i theta sum_j Z_j): multiplies each basis state by
  // exp(-i theta (n - 2 wt)).
  void apply_collective_z(double theta);

  double norm2() const;
  void normalize();
  cd inner(const StateVector& other) const;
  double fidelity(const StateVector& other) const;

  // <psi| P |psi>, including P's phase and sign.
  cd pauli_expectation(const PauliOperator& p) const;
  // Projects onto the +1 (sign=+1) or -1 eigenspace of P; returns the
  // pre-normalization squared norm and leaves the state renormalized when the
  // branch is nonzero.
  double project_pauli_eigenspace(const PauliOperator& p, int sign);

  // Probability mass per Hamming-weight sector (entries below 1e-12 dropped).
  std::map<int, double> excitation_spectrum() const;

 private:
  int n_;
  std::vector<cd> amps_;
  mutable std::vector<cd> scratch_;

  std::vector<cd>& scratch();
};

// |<a|b>| of normalized states, clamped to [0, 1].
double fidelity(const StateVector& a, const StateVector& b);

// Orthonormal logical basis of a code's codespace (n <= 16). |0...0> is built
// by projecting a computational seed onto the codespace and the +1 eigenspace
// of every logical Z; the remaining basis states are logical X products of it.
class LogicalBasis {
 public:
  explicit LogicalBasis(const StabilizerCode& code);

  const StabilizerCode& code() const { return *code_; }
  const StateVector& logical_zero() const { return zero_; }
  StateVector basis_state(uint32_t v) const;
  // k == 1 only: alpha |0bar> + beta |1bar>.
  StateVector from_amplitudes(cd alpha, cd beta) const;

 private:
  const StabilizerCode* code_;
  StateVector zero_;
};

// Squared norm of the codespace projection prod_i (I + g_i)/2 applied to
// the state, plus the renormalized projection when it is nonzero.
struct CodespaceProjection {
  double probability = 0.0;
  std::optional<StateVector> projected;
};
CodespaceProjection codespace_projection(const StateVector& state,
                                         const StabilizerCode& code);

// Encoding circuit for the [[8,1,3]] instance. The three-gate column is
// resolved at first use by requiring unit codespace projection; see
// resolved_encoding_gate_order().
StateVector encode_8_1_3(cd alpha, cd beta);

// Product order of the single-qubit column actually used by encode_8_1_3,
// e.g. "S*H*Tdg" (rightmost factor acts first). Resolved once by testing
// candidate orders against the codespace oracle.
const std::string& resolved_encoding_gate_order();

// [[8,1,3]] codeword built from the two outer codewords expressed in the
// |+Y>/|-Y> basis, concatenated with the pair code by controlled-X fan-out
// onto |1111>.
StateVector codeword_oracle_r2(cd alpha, cd beta);
StateVector codeword_oracle_r2(int logical_bit);

}  // namespace ce
