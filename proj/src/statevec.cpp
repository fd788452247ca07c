#include "ce/statevec.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ce/kernels.hpp"

namespace ce {

namespace {

constexpr int kMaxDenseQubits = 16;

// Qubit-space mask -> index-space mask (qubit 0 is the top index bit).
uint64_t index_mask(const QubitMask& mask, int n) {
  uint64_t out = 0;
  for (int j = 0; j < n; ++j) {
    if (mask.test(j)) out |= 1ULL << (n - 1 - j);
  }
  return out;
}

using Mat2 = std::array<std::array<cd, 2>, 2>;

Mat2 gate_matrix(GateKind kind) {
  constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  const cd i{0.0, 1.0};
  const cd t{inv_sqrt2, inv_sqrt2};
  switch (kind) {
    case GateKind::H:
      return {{{inv_sqrt2, inv_sqrt2}, {inv_sqrt2, -inv_sqrt2}}};
    case GateKind::S:
      return {{{1.0, 0.0}, {0.0, i}}};
    case GateKind::Sdg:
      return {{{1.0, 0.0}, {0.0, -i}}};
    case GateKind::T:
      return {{{1.0, 0.0}, {0.0, t}}};
    case GateKind::Tdg:
      return {{{1.0, 0.0}, {0.0, std::conj(t)}}};
    case GateKind::X:
      return {{{0.0, 1.0}, {1.0, 0.0}}};
    case GateKind::CX:
      break;
  }
  throw std::invalid_argument("no single-qubit matrix for this gate");
}

cd phase_i_pow(int k) {
  switch (((k % 4) + 4) & 3) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

}  // namespace

StateVector::StateVector(int n) : n_(n) {
  if (n < 1 || n > kMaxDenseQubits) {
    throw std::invalid_argument("dense simulation supports 1..16 qubits");
  }
  amps_.assign(size_t{1} << n, cd{0.0, 0.0});
  amps_[0] = 1.0;
}

std::vector<cd>& StateVector::scratch() {
  if (scratch_.size() != amps_.size()) scratch_.resize(amps_.size());
  return scratch_;
}

StateVector StateVector::prepare(std::span<const QubitInit> inits) {
  constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  std::vector<std::array<cd, 2>> qubits;
  qubits.reserve(inits.size());
  for (const QubitInit init : inits) {
    switch (init) {
      case QubitInit::Zero:
        qubits.push_back({cd{1.0, 0.0}, cd{0.0, 0.0}});
        break;
      case QubitInit::One:
        qubits.push_back({cd{0.0, 0.0}, cd{1.0, 0.0}});
        break;
      case QubitInit::Plus:
        qubits.push_back({cd{inv_sqrt2, 0.0}, cd{inv_sqrt2, 0.0}});
        break;
    }
  }
  return product(qubits);
}

StateVector StateVector::product(std::span<const std::array<cd, 2>> qubits) {
  StateVector state(static_cast<int>(qubits.size()));
  std::vector<cd> amps{cd{1.0, 0.0}};
  for (const auto& q : qubits) {
    std::vector<cd> next(amps.size() * 2);
    for (size_t i = 0; i < amps.size(); ++i) {
      next[2 * i] = amps[i] * q[0];
      next[2 * i + 1] = amps[i] * q[1];
    }
    amps = std::move(next);
  }
  state.amps_ = std::move(amps);
  return state;
}

void StateVector::apply_gate(const GateOp& gate) {
  if (gate.target < 0 || gate.target >= n_) {
    throw std::out_of_range("gate target out of range");
  }
  const uint64_t tbit = 1ULL << (n_ - 1 - gate.target);
  if (gate.kind == GateKind::CX) {
    if (gate.control < 0 || gate.control >= n_ ||
        gate.control == gate.target) {
      throw std::out_of_range("bad CX control");
    }
    const uint64_t cbit = 1ULL << (n_ - 1 - gate.control);
    for (size_t idx = 0; idx < amps_.size(); ++idx) {
      if ((idx & cbit) != 0 && (idx & tbit) == 0) {
        std::swap(amps_[idx], amps_[idx | tbit]);
      }
    }
    return;
  }
  const Mat2 u = gate_matrix(gate.kind);
  for (size_t idx = 0; idx < amps_.size(); ++idx) {
    if ((idx & tbit) != 0) continue;
    const cd a0 = amps_[idx];
    const cd a1 = amps_[idx | tbit];
    amps_[idx] = u[0][0] * a0 + u[0][1] * a1;
    amps_[idx | tbit] = u[1][0] * a0 + u[1][1] * a1;
  }
}

void StateVector::apply_pauli(const PauliOperator& p) {
  if (p.n != n_) throw std::invalid_argument("Pauli size mismatch");
  const uint64_t xi = index_mask(p.x, n_);
  const uint64_t zi = index_mask(p.z, n_);
  const cd base = phase_i_pow(p.phase_exp + (p.x & p.z).popcount());
  const auto& k = kernels::active();
  if (xi == 0) {
    k.pauli_apply(amps_.data(), amps_.data(), amps_.size(), 0, zi, base);
    return;
  }
  auto& tmp = scratch();
  k.pauli_apply(tmp.data(), amps_.data(), amps_.size(), xi, zi, base);
  amps_.swap(tmp);
}

void StateVector::apply_collective_z(double theta) {
  std::vector<cd> table(static_cast<size_t>(n_) + 1);
  for (int w = 0; w <= n_; ++w) {
    table[static_cast<size_t>(w)] = std::polar(1.0, -theta * (n_ - 2 * w));
  }
  kernels::active().phase_by_weight(amps_.data(), amps_.size(), table.data());
}

double StateVector::norm2() const {
  return kernels::active().norm2(amps_.data(), amps_.size());
}

void StateVector::normalize() {
  const double n2 = norm2();
  if (n2 <= 0.0) throw std::runtime_error("cannot normalize zero state");
  kernels::active().scale(amps_.data(), amps_.size(), 1.0 / std::sqrt(n2));
}

cd StateVector::inner(const StateVector& other) const {
  if (other.n_ != n_) throw std::invalid_argument("state size mismatch");
  return kernels::active().inner(amps_.data(), other.amps_.data(),
                                 amps_.size());
}

double StateVector::fidelity(const StateVector& other) const {
  return std::clamp(std::abs(inner(other)), 0.0, 1.0);
}

cd StateVector::pauli_expectation(const PauliOperator& p) const {
  if (p.n != n_) throw std::invalid_argument("Pauli size mismatch");
  const uint64_t xi = index_mask(p.x, n_);
  const uint64_t zi = index_mask(p.z, n_);
  const cd base = phase_i_pow(p.phase_exp + (p.x & p.z).popcount());
  return kernels::active().pauli_expectation(amps_.data(), amps_.size(), xi,
                                             zi, base);
}

double StateVector::project_pauli_eigenspace(const PauliOperator& p,
                                             int sign) {
  if (p.n != n_) throw std::invalid_argument("Pauli size mismatch");
  const uint64_t xi = index_mask(p.x, n_);
  const uint64_t zi = index_mask(p.z, n_);
  const cd base = phase_i_pow(p.phase_exp + (p.x & p.z).popcount());
  const auto& k = kernels::active();
  auto& tmp = scratch();
  const double norm =
      k.pauli_project(tmp.data(), amps_.data(), amps_.size(), xi, zi, base,
                      sign);
  amps_.swap(tmp);
  if (norm > 1e-24) {
    k.scale(amps_.data(), amps_.size(), 1.0 / std::sqrt(norm));
  }
  return norm;
}

std::map<int, double> StateVector::excitation_spectrum() const {
  std::vector<double> bins(static_cast<size_t>(n_) + 1, 0.0);
  kernels::active().weight_mass(amps_.data(), amps_.size(), bins.data());
  std::map<int, double> out;
  for (int w = 0; w <= n_; ++w) {
    if (bins[static_cast<size_t>(w)] > 1e-12) {
      out[w] = bins[static_cast<size_t>(w)];
    }
  }
  return out;
}

double fidelity(const StateVector& a, const StateVector& b) {
  return a.fidelity(b);
}

CodespaceProjection codespace_projection(const StateVector& state,
                                         const StabilizerCode& code) {
  if (code.n != state.n()) {
    throw std::invalid_argument("code/state size mismatch");
  }
  const auto& k = kernels::active();
  std::vector<cd> buf(state.dim());
  std::vector<cd> cur(state.amplitudes().begin(), state.amplitudes().end());
  for (const auto& g : code.generators) {
    const uint64_t xi = index_mask(g.x, code.n);
    const uint64_t zi = index_mask(g.z, code.n);
    const cd base = phase_i_pow(g.phase_exp + (g.x & g.z).popcount());
    k.pauli_project(buf.data(), cur.data(), cur.size(), xi, zi, base, +1);
    cur.swap(buf);
  }
  const double p = k.norm2(cur.data(), cur.size());
  CodespaceProjection result;
  result.probability = p;
  if (p > 1e-12) {
    k.scale(cur.data(), cur.size(), 1.0 / std::sqrt(p));
    StateVector proj(state.n());
    for (size_t i = 0; i < cur.size(); ++i) proj.amp(i) = cur[i];
    result.projected = std::move(proj);
  }
  return result;
}

namespace {

StateVector encode_with_order(cd alpha, cd beta,
                              const std::array<GateKind, 3>& rightmost_first) {
  const cd i{0.0, 1.0};
  std::vector<std::array<cd, 2>> qubits(8);
  constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  qubits[0] = {cd{inv_sqrt2, 0.0}, cd{inv_sqrt2, 0.0}};  // |+>
  qubits[1] = {beta, i * alpha};                         // S X |psi>
  qubits[2] = {cd{1.0, 0.0}, cd{0.0, 0.0}};
  qubits[3] = {cd{1.0, 0.0}, cd{0.0, 0.0}};
  for (int q = 4; q < 8; ++q) qubits[q] = {cd{0.0, 0.0}, cd{1.0, 0.0}};
  StateVector state = StateVector::product(qubits);

  state.apply_gate({GateKind::CX, 3, 0});
  state.apply_gate({GateKind::CX, 2, 1});
  state.apply_gate({GateKind::CX, 1, 0});  // fan-out from qubit 0
  state.apply_gate({GateKind::CX, 2, 0});
  for (int q = 0; q < 4; ++q) {
    for (const GateKind g : rightmost_first) state.apply_gate({g, q});
  }
  for (int q = 0; q < 4; ++q) {
    state.apply_gate({GateKind::CX, q + 4, q});
  }
  return state;
}

struct ResolvedOrder {
  std::array<GateKind, 3> rightmost_first;
  std::string label;
};

const char* gate_name(GateKind g) {
  switch (g) {
    case GateKind::S:
      return "S";
    case GateKind::H:
      return "H";
    case GateKind::Tdg:
      return "Tdg";
    default:
      return "?";
  }
}

// Resolves the ambiguous three-gate column by demanding that the circuit land
// in the codespace for a basis-spanning set of inputs.
const ResolvedOrder& resolve_order() {
  static const ResolvedOrder resolved = [] {
    using enum GateKind;
    // Product order, leftmost factor applied last. The first candidate reads
    // the printed column as the matrix product S * H * Tdg.
    const std::array<std::array<GateKind, 3>, 6> products = {{
        {S, H, Tdg},
        {Tdg, H, S},
        {H, S, Tdg},
        {H, Tdg, S},
        {S, Tdg, H},
        {Tdg, S, H},
    }};
    const StabilizerCode code = canonical_code_8_1_3();
    constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    const std::array<std::pair<cd, cd>, 3> inputs = {{
        {cd{1.0, 0.0}, cd{0.0, 0.0}},
        {cd{0.0, 0.0}, cd{1.0, 0.0}},
        {cd{inv_sqrt2, 0.0}, cd{inv_sqrt2, 0.0}},
    }};
    for (const auto& prod : products) {
      const std::array<GateKind, 3> rightmost_first{prod[2], prod[1], prod[0]};
      bool ok = true;
      for (const auto& [a, b] : inputs) {
        const StateVector st = encode_with_order(a, b, rightmost_first);
        if (codespace_projection(st, code).probability < 1.0 - 1e-10) {
          ok = false;
          break;
        }
      }
      if (ok) {
        std::string label = std::string(gate_name(prod[0])) + "*" +
                            gate_name(prod[1]) + "*" + gate_name(prod[2]);
        return ResolvedOrder{rightmost_first, label};
      }
    }
    throw std::logic_error("no gate ordering lands in the codespace");
  }();
  return resolved;
}

}  // namespace

const std::string& resolved_encoding_gate_order() {
  return resolve_order().label;
}

StateVector encode_8_1_3(cd alpha, cd beta) {
  const double nrm = std::norm(alpha) + std::norm(beta);
  if (std::abs(nrm - 1.0) > 1e-9) {
    throw std::invalid_argument("encode input must be normalized");
  }
  return encode_with_order(alpha, beta, resolve_order().rightmost_first);
}

StateVector codeword_oracle_r2(cd alpha, cd beta) {
  const double nrm = std::norm(alpha) + std::norm(beta);
  if (std::abs(nrm - 1.0) > 1e-9) {
    throw std::invalid_argument("oracle input must be normalized");
  }
  constexpr double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
  const std::array<cd, 2> plus_y = {cd{inv_sqrt2, 0.0}, cd{0.0, inv_sqrt2}};
  const std::array<cd, 2> minus_y = {cd{inv_sqrt2, 0.0}, cd{0.0, -inv_sqrt2}};

  auto outer_product = [&](const std::array<std::array<cd, 2>, 4>& qs) {
    return StateVector::product(std::span<const std::array<cd, 2>>(
        qs.data(), qs.size()));
  };
  const StateVector o0a = outer_product({plus_y, minus_y, minus_y, plus_y});
  const StateVector o0b = outer_product({minus_y, plus_y, plus_y, minus_y});
  const StateVector o1a = outer_product({plus_y, plus_y, plus_y, plus_y});
  const StateVector o1b = outer_product({minus_y, minus_y, minus_y, minus_y});

  // psi_outer = alpha |0>_outer + beta |1>_outer on 4 qubits.
  std::vector<cd> outer(16);
  for (size_t idx = 0; idx < 16; ++idx) {
    const cd zero_amp =
        inv_sqrt2 * (o0a.amplitudes()[idx] + o0b.amplitudes()[idx]);
    const cd one_amp =
        inv_sqrt2 * (o1a.amplitudes()[idx] - o1b.amplitudes()[idx]);
    outer[idx] = alpha * zero_amp + beta * one_amp;
  }

  StateVector state(8);
  state.amp(0) = 0.0;
  for (size_t idx = 0; idx < 16; ++idx) {
    state.amp(idx << 4 | 0xF) = outer[idx];
  }
  for (int q = 0; q < 4; ++q) {
    state.apply_gate({GateKind::CX, q + 4, q});
  }
  const double n2 = state.norm2();
  if (std::abs(n2 - 1.0) > 1e-10) {
    throw std::logic_error("oracle construction lost norm");
  }
  state.normalize();
  return state;
}

StateVector codeword_oracle_r2(int logical_bit) {
  if (logical_bit != 0 && logical_bit != 1) {
    throw std::invalid_argument("logical bit must be 0 or 1");
  }
  return logical_bit == 0 ? codeword_oracle_r2(cd{1.0, 0.0}, cd{0.0, 0.0})
                          : codeword_oracle_r2(cd{0.0, 0.0}, cd{1.0, 0.0});
}

namespace {

// Attempts |0bar> from one computational seed; empty when the projection of
// the seed vanishes.
std::optional<StateVector> logical_zero_from_seed(const StabilizerCode& code,
                                                  size_t seed_index) {
  StateVector state(code.n);
  state.amp(0) = 0.0;
  state.amp(seed_index) = 1.0;
  for (const auto& g : code.generators) {
    if (state.project_pauli_eigenspace(g, +1) < 1e-12) return std::nullopt;
  }
  for (const auto& lz : code.logical_z) {
    if (state.project_pauli_eigenspace(lz, +1) < 1e-12) return std::nullopt;
  }
  return state;
}

}  // namespace

LogicalBasis::LogicalBasis(const StabilizerCode& code)
    : code_(&code), zero_(code.n) {
  if (static_cast<int>(code.logical_x.size()) != code.k ||
      static_cast<int>(code.logical_z.size()) != code.k) {
    throw std::invalid_argument("code is missing logical operators");
  }
  // Seeds with one excitation per (m, m + n/2) pair cover the support of
  // every codeword of this family; fall back to a full scan otherwise.
  std::vector<size_t> seeds;
  if (code.n % 2 == 0) {
    const int half = code.n / 2;
    for (size_t c = 0; c < (size_t{1} << half); ++c) {
      size_t idx = 0;
      for (int m = 0; m < half; ++m) {
        const size_t bit = (c >> m) & 1;
        idx |= bit << (code.n - 1 - m);
        idx |= (bit ^ 1) << (code.n - 1 - (m + half));
      }
      seeds.push_back(idx);
    }
  }
  for (size_t idx = 0; idx < (size_t{1} << code.n); ++idx) {
    seeds.push_back(idx);
  }
  for (const size_t seed : seeds) {
    if (auto st = logical_zero_from_seed(code, seed)) {
      zero_ = std::move(*st);
      return;
    }
  }
  throw std::logic_error("no computational seed overlaps the codespace");
}

StateVector LogicalBasis::basis_state(uint32_t v) const {
  StateVector state = zero_;
  for (int i = 0; i < code_->k; ++i) {
    if ((v >> i) & 1) state.apply_pauli(code_->logical_x[static_cast<size_t>(i)]);
  }
  return state;
}

StateVector LogicalBasis::from_amplitudes(cd alpha, cd beta) const {
  if (code_->k != 1) {
    throw std::invalid_argument("amplitude form requires k == 1");
  }
  const StateVector one = basis_state(1);
  StateVector state = zero_;
  for (size_t i = 0; i < state.dim(); ++i) {
    state.amp(i) = alpha * zero_.amplitudes()[i] + beta * one.amplitudes()[i];
  }
  return state;
}

}  // namespace ce
