#include "ce/verifier.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "ce/statevec.hpp"
#include "ce/symplectic.hpp"

namespace ce {

namespace {

constexpr uint64_t kPatternBudget = 1'000'000'000ULL;

uint64_t binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  uint64_t r = 1;
  for (int i = 1; i <= k; ++i) {
    r = r * static_cast<uint64_t>(n - k + i) / static_cast<uint64_t>(i);
  }
  return r;
}

bool validate_logical_against(const PauliOperator& op,
                              const StabilizerCode& code) {
  for (const auto& g : code.generators) {
    if (!commutes(op, g)) return false;
  }
  return !SymplecticBasis(code.generators).contains(op, /*mod_phase=*/true);
}

}  // namespace

DistanceScan compute_distance(const StabilizerCode& code, int w_max) {
  if (w_max < 1 || w_max > 4) {
    throw std::invalid_argument("w_max must be in 1..4");
  }
  uint64_t total = 0;
  uint64_t pow3 = 1;
  for (int w = 1; w <= w_max; ++w) {
    pow3 *= 3;
    total += binom(code.n, w) * pow3;
  }
  if (total > kPatternBudget) {
    throw BudgetExceeded("distance enumeration would need " +
                         std::to_string(total) +
                         " patterns; budget is 1e9, refusing");
  }

  const SymplecticBasis stab(code.generators);
  const int m = static_cast<int>(code.generators.size());
  if (m > QubitMask::capacity) {
    throw std::invalid_argument("too many generators");
  }

  // Syndrome word of every single-qubit error: bit i set iff it anticommutes
  // with generator i.
  constexpr std::array<Pauli, 3> kinds = {Pauli::X, Pauli::Y, Pauli::Z};
  std::vector<std::array<QubitMask, 3>> single(static_cast<size_t>(code.n));
  for (int q = 0; q < code.n; ++q) {
    for (int t = 0; t < 3; ++t) {
      const PauliOperator e = PauliOperator::single(code.n, q, kinds[t]);
      QubitMask s{};
      for (int i = 0; i < m; ++i) {
        if (!commutes(e, code.generators[static_cast<size_t>(i)])) s.set(i);
      }
      single[static_cast<size_t>(q)][static_cast<size_t>(t)] = s;
    }
  }

  DistanceScan scan;
  scan.searched_up_to = w_max;
  for (int w = 1; w <= w_max; ++w) {
    std::vector<int> support(static_cast<size_t>(w));
    for (int i = 0; i < w; ++i) support[static_cast<size_t>(i)] = i;
    std::vector<int> types(static_cast<size_t>(w), 0);
    while (true) {
      std::fill(types.begin(), types.end(), 0);
      while (true) {
        QubitMask syndrome{};
        for (int i = 0; i < w; ++i) {
          syndrome ^= single[static_cast<size_t>(support[static_cast<size_t>(
              i)])][static_cast<size_t>(types[static_cast<size_t>(i)])];
        }
        if (syndrome.none()) {
          PauliOperator cand = PauliOperator::identity(code.n);
          for (int i = 0; i < w; ++i) {
            cand.set_kind(support[static_cast<size_t>(i)],
                          kinds[static_cast<size_t>(
                              types[static_cast<size_t>(i)])]);
          }
          if (!stab.contains(cand, /*mod_phase=*/true)) {
            scan.distance = w;
            scan.witness = cand;
            return scan;
          }
        }
        // Next type assignment, last position fastest (X < Y < Z).
        int pos = w - 1;
        while (pos >= 0 && types[static_cast<size_t>(pos)] == 2) {
          types[static_cast<size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++types[static_cast<size_t>(pos)];
      }
      // Next support combination in lexicographic order.
      int pos = w - 1;
      while (pos >= 0 &&
             support[static_cast<size_t>(pos)] == code.n - w + pos) {
        --pos;
      }
      if (pos < 0) break;
      ++support[static_cast<size_t>(pos)];
      for (int i = pos + 1; i < w; ++i) {
        support[static_cast<size_t>(i)] = support[static_cast<size_t>(i - 1)] + 1;
      }
    }
  }
  return scan;
}

PauliOperator claimed_weight3_logical(int r) {
  const StabilizerCode code = build_ce_code(r);
  const int half_block = 1 << (r - 1);
  const int block = 1 << r;
  PauliOperator op = PauliOperator::identity(code.n);
  op.x.set(half_block - 1);
  op.z.set(half_block);
  op.x.set(half_block - 1 + block);
  if (!validate_logical_against(op, code)) {
    throw std::logic_error(
        "claimed weight-3 operator is not a logical of the constructed code");
  }
  return op;
}

std::vector<PauliOperator> outer_checks(const CheckMatrix& cm) {
  const int block = cm.block_size();
  std::vector<PauliOperator> checks;
  checks.reserve(cm.rows.size());
  for (const uint64_t row : cm.rows) {
    PauliOperator g = PauliOperator::identity(block);
    for (int m = 0; m < block; ++m) {
      if ((row >> m) & 1) {
        g.x.set(m);
        g.z.set(block - 1 - m);
      }
    }
    checks.push_back(g);
  }
  return checks;
}

PauliOperator outer_code_undetectable(int r) {
  const CheckMatrix cm = extended_hamming_checks(r);
  const int half_block = 1 << (r - 1);
  PauliOperator op = PauliOperator::identity(cm.block_size());
  op.x.set(half_block - 1);
  op.z.set(half_block);
  for (const auto& g : outer_checks(cm)) {
    if (!commutes(op, g)) {
      throw std::logic_error(
          "weight-2 operator unexpectedly detected by an outer check");
    }
  }
  return op;
}

int verify_constant_excitation(const StabilizerCode& code) {
  if (code.n % 2 != 0) {
    throw std::invalid_argument("not a CE code of this family");
  }
  const int block = code.n / 2;
  for (int m = 0; m < block; ++m) {
    PauliOperator want = PauliOperator::identity(code.n);
    want.z.set(m);
    want.z.set(m + block);
    want.phase_exp = 2;
    bool found = false;
    for (const auto& g : code.generators) {
      if (g == want) {
        found = true;
        break;
      }
    }
    if (!found) {
      throw std::invalid_argument(
          "not a CE code of this family: missing pair check -Z_" +
          std::to_string(m) + " Z_" + std::to_string(m + block));
    }
  }
  // Each signed pair check forces odd parity on (m, m+block), so every
  // component carries exactly one excitation per pair: block in total.
  if (code.n <= 16) {
    const LogicalBasis basis(code);
    for (uint32_t v = 0; v < (1u << code.k); ++v) {
      const auto spectrum = basis.basis_state(v).excitation_spectrum();
      if (spectrum.size() != 1 || spectrum.count(block) == 0 ||
          std::abs(spectrum.at(block) - 1.0) > 1e-9) {
        throw std::logic_error("state-vector scan found a non-constant "
                               "excitation component");
      }
    }
  }
  return block;
}

VerificationReport verify_code(const StabilizerCode& code, int w_max) {
  VerificationReport rep;
  rep.code_id = code.id();

  rep.commutation_ok = true;
  for (size_t i = 0; i < code.generators.size() && rep.commutation_ok; ++i) {
    for (size_t j = i + 1; j < code.generators.size(); ++j) {
      if (!commutes(code.generators[i], code.generators[j])) {
        rep.commutation_ok = false;
        break;
      }
    }
  }
  rep.independence_ok =
      sympl_rank(code.generators) == static_cast<int>(code.generators.size());

  if (rep.commutation_ok && rep.independence_ok) {
    rep.distance = compute_distance(code, w_max);
    rep.distance_matches_claim =
        rep.distance.distance.has_value() &&
        *rep.distance.distance == code.claimed_distance;

    rep.logicals_ok =
        static_cast<int>(code.logical_x.size()) == code.k &&
        static_cast<int>(code.logical_z.size()) == code.k;
    if (rep.logicals_ok) {
      for (int i = 0; i < code.k && rep.logicals_ok; ++i) {
        const auto& lx = code.logical_x[static_cast<size_t>(i)];
        const auto& lz = code.logical_z[static_cast<size_t>(i)];
        rep.logicals_ok = validate_logical_against(lx, code) &&
                          validate_logical_against(lz, code);
        for (int j = 0; j < code.k && rep.logicals_ok; ++j) {
          const bool want_anticommute = i == j;
          rep.logicals_ok =
              commutes(lx, code.logical_z[static_cast<size_t>(j)]) !=
              want_anticommute;
          if (!rep.logicals_ok) break;
          rep.logicals_ok =
              commutes(lx, code.logical_x[static_cast<size_t>(j)]) &&
              commutes(lz, code.logical_z[static_cast<size_t>(j)]);
        }
      }
    }

    try {
      rep.excitation = verify_constant_excitation(code);
    } catch (const std::exception&) {
      rep.excitation.reset();
    }

    if (code.r >= 2 && code.n == (2 << code.r)) {
      const int half_block = 1 << (code.r - 1);
      const int block = 1 << code.r;
      PauliOperator op = PauliOperator::identity(code.n);
      op.x.set(half_block - 1);
      op.z.set(half_block);
      op.x.set(half_block - 1 + block);
      rep.claimed_logical = op.str();
      rep.claimed_logical_ok = validate_logical_against(op, code);
    }
  }

  rep.all_ok = rep.commutation_ok && rep.independence_ok &&
               rep.distance_matches_claim && rep.logicals_ok &&
               rep.excitation.has_value() &&
               (code.r < 2 || rep.claimed_logical_ok);
  return rep;
}

}  // namespace ce
