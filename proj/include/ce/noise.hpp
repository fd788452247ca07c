#pragma once

#include <complex>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ce/code.hpp"
#include "ce/pauli.hpp"
#include "ce/rng.hpp"
#include "ce/statevec.hpp"

namespace ce {

enum class ChannelOrdering : uint8_t {
  CCAfterPauli,  // Pauli error first, then the collective rotation
  PauliAfterCC,
};

struct DeltaTPolicy {
  bool random = false;  // uniform over [0, 2pi) per shot
  double value = 0.0;

  static DeltaTPolicy fixed(double v) { return {false, v}; }
  static DeltaTPolicy uniform() { return {true, 0.0}; }
};

struct NoiseConfig {
  double p = 0.0;  // per-qubit depolarizing probability
  DeltaTPolicy delta_t{};
  ChannelOrdering ordering = ChannelOrdering::CCAfterPauli;
};

// Syndrome bit i is generator i's outcome; bit 0 prints first.
using SyndromeBits = QubitMask;

std::string syndrome_string(SyndromeBits bits, int num_generators);
SyndromeBits syndrome_from_string(const std::string& text);

// Algebraic syndrome: bit i set iff the error anticommutes with generator i.
// Generator signs cannot matter here.
SyndromeBits pauli_syndrome(const PauliOperator& error,
                            const StabilizerCode& code);

// Projectively measures each signed generator in order, Born-sampling the
// outcomes; bit 0 means the +1 eigenvalue of the signed generator, so
// codewords read all-zero. The state collapses and is renormalized.
SyndromeBits measure_syndrome(StateVector& state, const StabilizerCode& code,
                              Xoshiro256pp& rng);

struct SyndromeTable {
  int num_generators = 0;
  struct MaskHash {
    size_t operator()(const QubitMask& m) const {
      return static_cast<size_t>(m.lo * 0x9E3779B97F4A7C15ULL ^ m.hi);
    }
  };
  std::unordered_map<QubitMask, PauliOperator, MaskHash> corrections;

  bool known(SyndromeBits s) const { return corrections.count(s) != 0; }
  const PauliOperator* find(SyndromeBits s) const {
    const auto it = corrections.find(s);
    return it == corrections.end() ? nullptr : &it->second;
  }
};

// Weight-1 lookup decoder. Errors are enumerated qubit-ascending with types
// ordered X, Y, Z; the first error claiming a syndrome becomes its correction
// and any later collision must be equivalent modulo the stabilizer group,
// otherwise the code does not correct weight-1 errors. The all-zero syndrome
// maps to the identity.
SyndromeTable build_lookup(const StabilizerCode& code);

// Independent per-qubit sampling: identity with probability 1-p, otherwise
// X, Y, Z with probability p/3 each.
PauliOperator sample_depolarizing(int n, double p, Xoshiro256pp& rng);

struct LogicalInput {
  bool use_amplitudes = false;
  std::complex<double> alpha{1.0, 0.0};
  std::complex<double> beta{0.0, 0.0};
  uint32_t basis_index = 0;

  static LogicalInput amplitudes(std::complex<double> a,
                                 std::complex<double> b) {
    return {true, a, b, 0};
  }
  static LogicalInput basis(uint32_t v) { return {false, {}, {}, v}; }
  // k = 1 state that no nontrivial logical Pauli preserves, so a logical
  // residual always counts as failure.
  static LogicalInput generic();
};

struct ShotResult {
  bool success = false;
  bool heralded_uncorrectable = false;
  PauliOperator sampled_error;
  SyndromeBits syndrome{};
};

// Shared per-sweep state: the decoder table and the ideal input codeword.
struct ShotContext {
  const StabilizerCode* code = nullptr;
  const SyndromeTable* table = nullptr;
  StateVector ideal;

  ShotContext(const StabilizerCode& c, const SyndromeTable& t,
              StateVector state)
      : code(&c), table(&t), ideal(std::move(state)) {}
};

ShotContext make_shot_context(const StabilizerCode& code,
                              const SyndromeTable& table,
                              const LogicalBasis& basis,
                              const LogicalInput& input);

// One trajectory: apply the given error and rotation, measure, correct via
// the table (identity + herald when the syndrome is unknown), and compare
// with the ideal codeword. Success means fidelity 1 within 1e-9.
ShotResult run_shot_with_error(const ShotContext& ctx,
                               const PauliOperator& error, double theta,
                               ChannelOrdering ordering, Xoshiro256pp& rng);

// Full sampled shot. Draw order: per-qubit error draws, then the rotation
// angle when the policy is random, then one Born draw per generator.
ShotResult run_shot(const ShotContext& ctx, const NoiseConfig& noise,
                    Xoshiro256pp& rng);

// Convenience wrapper matching the one-off call shape; sweeps should build
// the context once instead.
ShotResult run_shot(const StabilizerCode& code, const LogicalInput& input,
                    const NoiseConfig& noise, Xoshiro256pp& rng);

}  // namespace ce
