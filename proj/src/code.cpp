#include "ce/code.hpp"

#include <deque>
#include <stdexcept>

#include "ce/symplectic.hpp"

namespace ce {

CheckMatrix extended_hamming_checks(int r) {
  if (r < 2) {
    throw std::invalid_argument(
        "family undefined for r < 2 (no logical qubits)");
  }
  if (r > 6) {
    throw std::invalid_argument("r > 6 exceeds the supported 128-qubit width");
  }
  const int block = 1 << r;
  CheckMatrix cm;
  cm.r = r;
  cm.rows.resize(static_cast<size_t>(r) + 1, 0);
  for (int m = block / 2; m < block; ++m) {
    cm.rows[0] |= 1ULL << m;
  }
  for (int i = 1; i <= r; ++i) {
    for (int m = 0; m < block; ++m) {
      if (((m >> (r - i)) & 1) == 0) {
        cm.rows[static_cast<size_t>(i)] |= 1ULL << m;
      }
    }
  }
  return cm;
}

StabilizerCode build_ce_code(int r) {
  const CheckMatrix cm = extended_hamming_checks(r);
  const int block = cm.block_size();
  const int n = 2 * block;

  StabilizerCode code;
  code.n = n;
  code.r = r;
  code.k = block - (r + 1);
  code.claimed_distance = 3;

  for (const uint64_t row : cm.rows) {
    PauliOperator g = PauliOperator::identity(n);
    for (int m = 0; m < block; ++m) {
      if ((row >> m) & 1) {
        g.x.set(m);
        g.z.set(block - 1 - m);
        g.x.set(m + block);
      }
    }
    code.generators.push_back(g);
  }
  for (int m = 0; m < block; ++m) {
    PauliOperator g = PauliOperator::identity(n);
    g.z.set(m);
    g.z.set(m + block);
    g.phase_exp = 2;
    code.generators.push_back(g);
  }

  auto [lx, lz] = derive_logical_operators(code);
  code.logical_x = std::move(lx);
  code.logical_z = std::move(lz);
  return code;
}

namespace {

// Nullspace basis of the GF(2) system {v : sympl_product(v, g) = 0 for all g},
// i.e. the centralizer of the generator span, via elimination on the
// J-swapped rows (so the symplectic product becomes an ordinary dot product).
std::vector<SymplecticVector> centralizer_basis(
    const std::vector<PauliOperator>& gens, int n) {
  const int cols = 2 * n;
  std::vector<SymplecticVector> rows;
  rows.reserve(gens.size());
  for (const auto& g : gens) {
    rows.push_back({g.z, g.x});  // swapped halves
  }
  // Forward elimination with pivot bookkeeping.
  std::vector<int> pivot_of_row;
  std::vector<char> is_pivot(static_cast<size_t>(cols), 0);
  size_t rank = 0;
  for (int c = 0; c < cols && rank < rows.size(); ++c) {
    size_t sel = rank;
    while (sel < rows.size() && !rows[sel].test(c, n)) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    for (size_t i = 0; i < rows.size(); ++i) {
      if (i != rank && rows[i].test(c, n)) rows[i] ^= rows[rank];
    }
    pivot_of_row.push_back(c);
    is_pivot[static_cast<size_t>(c)] = 1;
    ++rank;
  }
  rows.resize(rank);

  std::vector<SymplecticVector> basis;
  for (int free_col = 0; free_col < cols; ++free_col) {
    if (is_pivot[static_cast<size_t>(free_col)]) continue;
    SymplecticVector v{};
    auto set_col = [&](SymplecticVector& w, int c) {
      if (c < n) {
        w.x.set(c);
      } else {
        w.z.set(c - n);
      }
    };
    set_col(v, free_col);
    for (size_t i = 0; i < rank; ++i) {
      if (rows[i].test(free_col, n)) set_col(v, pivot_of_row[i]);
    }
    basis.push_back(v);
  }
  return basis;
}

PauliOperator from_vec(const SymplecticVector& v, int n) {
  PauliOperator p = PauliOperator::identity(n);
  p.x = v.x;
  p.z = v.z;
  return p;
}

}  // namespace

std::pair<std::vector<PauliOperator>, std::vector<PauliOperator>>
derive_logical_operators(const StabilizerCode& code) {
  const auto& gens = code.generators;
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = i + 1; j < gens.size(); ++j) {
      if (!commutes(gens[i], gens[j])) {
        throw std::invalid_argument("generators do not commute");
      }
    }
  }
  const SymplecticBasis stab(gens);
  if (stab.rank() != static_cast<int>(gens.size())) {
    throw std::invalid_argument("generators are dependent");
  }
  const int n = code.n;
  const int k = n - static_cast<int>(gens.size());

  // Coset representatives of centralizer / stabilizer.
  SymplecticBasis combined = stab;
  std::deque<SymplecticVector> reps;
  for (const auto& v : centralizer_basis(gens, n)) {
    if (combined.contains_vector(v)) continue;
    PauliOperator p = from_vec(v, n);
    std::vector<PauliOperator> ext(combined.row_products());
    ext.push_back(p);
    combined = SymplecticBasis(ext);
    reps.push_back(v);
  }
  if (static_cast<int>(reps.size()) != 2 * k) {
    throw std::logic_error("centralizer dimension mismatch");
  }

  // Symplectic pairing: repeatedly take the first vector, find a partner it
  // anticommutes with, and strip both directions from the remainder.
  std::vector<PauliOperator> lx, lz;
  while (!reps.empty()) {
    SymplecticVector a = reps.front();
    reps.pop_front();
    size_t bi = reps.size();
    for (size_t i = 0; i < reps.size(); ++i) {
      if (sympl_product(a, reps[i]) == 1) {
        bi = i;
        break;
      }
    }
    if (bi == reps.size()) {
      throw std::logic_error("symplectic pairing failed");
    }
    SymplecticVector b = reps[bi];
    reps.erase(reps.begin() + static_cast<long>(bi));
    for (auto& c : reps) {
      if (sympl_product(c, b) == 1) c ^= a;
      if (sympl_product(c, a) == 1) c ^= b;
    }
    // Canonical coset representative modulo the stabilizer.
    lx.push_back(from_vec(stab.reduce_vector(a), n));
    lz.push_back(from_vec(stab.reduce_vector(b), n));
  }
  return {lx, lz};
}

StabilizerCode canonical_code_8_1_3() {
  StabilizerCode code;
  code.n = 8;
  code.k = 1;
  code.r = 2;
  code.claimed_distance = 3;
  for (const char* s : {"ZZXXIIXX", "XXZZXXII", "XZXZXIXI", "-ZIIIZIII",
                        "-IZIIIZII", "-IIZIIIZI", "-IIIZIIIZ"}) {
    code.generators.push_back(parse_pauli(s));
  }
  code.logical_x = {parse_pauli("IZZYIIIX")};
  code.logical_z = {parse_pauli("ZZZZIIII")};
  return code;
}

}  // namespace ce
