#include "ce/noise.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ce/symplectic.hpp"

namespace ce {

std::string syndrome_string(SyndromeBits bits, int num_generators) {
  std::string out(static_cast<size_t>(num_generators), '0');
  for (int i = 0; i < num_generators; ++i) {
    if (bits.test(i)) out[static_cast<size_t>(i)] = '1';
  }
  return out;
}

SyndromeBits syndrome_from_string(const std::string& text) {
  SyndromeBits bits{};
  if (text.size() > QubitMask::capacity) {
    throw std::invalid_argument("syndrome string too long");
  }
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '1') {
      bits.set(static_cast<int>(i));
    } else if (text[i] != '0') {
      throw std::invalid_argument("syndrome strings are over {0,1}");
    }
  }
  return bits;
}

SyndromeBits pauli_syndrome(const PauliOperator& error,
                            const StabilizerCode& code) {
  if (error.n != code.n) {
    throw std::invalid_argument("error/code size mismatch");
  }
  SyndromeBits bits{};
  for (size_t i = 0; i < code.generators.size(); ++i) {
    if (!commutes(error, code.generators[i])) bits.set(static_cast<int>(i));
  }
  return bits;
}

SyndromeBits measure_syndrome(StateVector& state, const StabilizerCode& code,
                              Xoshiro256pp& rng) {
  if (state.n() != code.n) {
    throw std::invalid_argument("state/code size mismatch");
  }
  SyndromeBits bits{};
  for (size_t i = 0; i < code.generators.size(); ++i) {
    const auto& g = code.generators[i];
    const double expectation = state.pauli_expectation(g).real();
    const double p_plus = std::clamp(0.5 * (1.0 + expectation), 0.0, 1.0);
    const bool plus = rng.uniform01() < p_plus;
    const double branch_norm = state.project_pauli_eigenspace(g, plus ? 1 : -1);
    if (branch_norm < 1e-24) {
      throw std::runtime_error("measurement collapsed onto a zero-norm branch");
    }
    if (!plus) bits.set(static_cast<int>(i));
  }
  return bits;
}

SyndromeTable build_lookup(const StabilizerCode& code) {
  SyndromeTable table;
  table.num_generators = static_cast<int>(code.generators.size());
  table.corrections.emplace(SyndromeBits{}, PauliOperator::identity(code.n));

  const SymplecticBasis stab(code.generators);
  constexpr Pauli kinds[3] = {Pauli::X, Pauli::Y, Pauli::Z};
  for (int q = 0; q < code.n; ++q) {
    for (const Pauli kind : kinds) {
      const PauliOperator e = PauliOperator::single(code.n, q, kind);
      const SyndromeBits s = pauli_syndrome(e, code);
      const auto it = table.corrections.find(s);
      if (it == table.corrections.end()) {
        table.corrections.emplace(s, e);
        continue;
      }
      if (!stab.contains(multiply(it->second, e), /*mod_phase=*/true)) {
        throw std::runtime_error(
            "code does not correct weight-1 errors: syndrome collision "
            "between inequivalent errors " +
            it->second.str() + " and " + e.str());
      }
    }
  }
  return table;
}

PauliOperator sample_depolarizing(int n, double p, Xoshiro256pp& rng) {
  if (p < 0.0 || p > 1.0) {
    throw std::invalid_argument("depolarizing probability must be in [0,1]");
  }
  PauliOperator e = PauliOperator::identity(n);
  for (int q = 0; q < n; ++q) {
    const double u = rng.uniform01();
    if (u >= p) continue;
    const int t = std::min(2, static_cast<int>(3.0 * u / p));
    e.set_kind(q, t == 0 ? Pauli::X : (t == 1 ? Pauli::Y : Pauli::Z));
  }
  return e;
}

LogicalInput LogicalInput::generic() {
  const double c = std::cos(std::numbers::pi / 8);
  const double s = std::sin(std::numbers::pi / 8);
  const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  return amplitudes({c, 0.0}, {s * inv_sqrt2, s * inv_sqrt2});
}

ShotContext make_shot_context(const StabilizerCode& code,
                              const SyndromeTable& table,
                              const LogicalBasis& basis,
                              const LogicalInput& input) {
  StateVector ideal = input.use_amplitudes
                          ? basis.from_amplitudes(input.alpha, input.beta)
                          : basis.basis_state(input.basis_index);
  return ShotContext(code, table, std::move(ideal));
}

ShotResult run_shot_with_error(const ShotContext& ctx,
                               const PauliOperator& error, double theta,
                               ChannelOrdering ordering, Xoshiro256pp& rng) {
  ShotResult result;
  result.sampled_error = error;

  StateVector state = ctx.ideal;
  if (ordering == ChannelOrdering::CCAfterPauli) {
    state.apply_pauli(error);
    state.apply_collective_z(theta);
  } else {
    state.apply_collective_z(theta);
    state.apply_pauli(error);
  }

  result.syndrome = measure_syndrome(state, *ctx.code, rng);
  if (const PauliOperator* correction = ctx.table->find(result.syndrome)) {
    state.apply_pauli(*correction);
  } else {
    result.heralded_uncorrectable = true;
  }
  result.success = state.fidelity(ctx.ideal) >= 1.0 - 1e-9;
  return result;
}

ShotResult run_shot(const ShotContext& ctx, const NoiseConfig& noise,
                    Xoshiro256pp& rng) {
  const PauliOperator error =
      sample_depolarizing(ctx.code->n, noise.p, rng);
  const double theta = noise.delta_t.random
                           ? 2.0 * std::numbers::pi * rng.uniform01()
                           : noise.delta_t.value;
  return run_shot_with_error(ctx, error, theta, noise.ordering, rng);
}

ShotResult run_shot(const StabilizerCode& code, const LogicalInput& input,
                    const NoiseConfig& noise, Xoshiro256pp& rng) {
  const SyndromeTable table = build_lookup(code);
  const LogicalBasis basis(code);
  const ShotContext ctx = make_shot_context(code, table, basis, input);
  return run_shot(ctx, noise, rng);
}

}  // namespace ce
