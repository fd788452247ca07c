#pragma once

// Test-only oracles kept independent of the library internals: dense matrix
// algebra for exact Pauli phase checks, and exhaustive classical-code
// enumeration.

#include <complex>
#include <cstdint>
#include <vector>

#include "ce/code.hpp"
#include "ce/pauli.hpp"
#include "ce/rng.hpp"

namespace ce::testing {

using cd = std::complex<double>;
using Mat = std::vector<std::vector<cd>>;

inline Mat single_matrix(Pauli kind) {
  const cd i{0.0, 1.0};
  switch (kind) {
    case Pauli::X:
      return {{0, 1}, {1, 0}};
    case Pauli::Y:
      return {{0, -i}, {i, 0}};
    case Pauli::Z:
      return {{1, 0}, {0, -1}};
    default:
      return {{1, 0}, {0, 1}};
  }
}

inline Mat kron(const Mat& a, const Mat& b) {
  const size_t ar = a.size(), br = b.size();
  Mat out(ar * br, std::vector<cd>(ar * br, 0.0));
  for (size_t i = 0; i < ar; ++i) {
    for (size_t j = 0; j < ar; ++j) {
      for (size_t k = 0; k < br; ++k) {
        for (size_t l = 0; l < br; ++l) {
          out[i * br + k][j * br + l] = a[i][j] * b[k][l];
        }
      }
    }
  }
  return out;
}

inline Mat to_matrix(const PauliOperator& p) {
  Mat m = {{1.0}};
  for (int q = 0; q < p.n; ++q) {
    m = kron(m, single_matrix(p.kind_at(q)));
  }
  cd phase{1.0, 0.0};
  for (int k = 0; k < (p.phase_exp & 3); ++k) phase *= cd{0.0, 1.0};
  for (auto& row : m) {
    for (auto& v : row) v *= phase;
  }
  return m;
}

inline Mat matmul(const Mat& a, const Mat& b) {
  const size_t n = a.size();
  Mat out(n, std::vector<cd>(n, 0.0));
  for (size_t i = 0; i < n; ++i) {
    for (size_t k = 0; k < n; ++k) {
      const cd aik = a[i][k];
      if (aik == cd{0.0, 0.0}) continue;
      for (size_t j = 0; j < n; ++j) {
        out[i][j] += aik * b[k][j];
      }
    }
  }
  return out;
}

inline bool mat_equal(const Mat& a, const Mat& b, double tol = 1e-12) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i) {
    for (size_t j = 0; j < a.size(); ++j) {
      if (std::abs(a[i][j] - b[i][j]) > tol) return false;
    }
  }
  return true;
}

inline PauliOperator random_pauli(Xoshiro256pp& rng, int n,
                                  bool random_phase = true) {
  PauliOperator p = PauliOperator::identity(n);
  for (int q = 0; q < n; ++q) {
    switch (rng.next() & 3) {
      case 1:
        p.set_kind(q, Pauli::X);
        break;
      case 2:
        p.set_kind(q, Pauli::Y);
        break;
      case 3:
        p.set_kind(q, Pauli::Z);
        break;
      default:
        break;
    }
  }
  if (random_phase) p.phase_exp = static_cast<int>(rng.next() & 3);
  return p;
}

// Exhaustive nullspace of a classical check matrix; returns the codeword
// bitmasks.
inline std::vector<uint64_t> classical_codewords(const CheckMatrix& cm) {
  std::vector<uint64_t> words;
  const int block = cm.block_size();
  for (uint64_t x = 0; x < (1ULL << block); ++x) {
    bool ok = true;
    for (const uint64_t row : cm.rows) {
      if (std::popcount(row & x) & 1) {
        ok = false;
        break;
      }
    }
    if (ok) words.push_back(x);
  }
  return words;
}

inline int classical_min_distance(const CheckMatrix& cm) {
  int best = 1 << 30;
  for (const uint64_t w : classical_codewords(cm)) {
    const int wt = std::popcount(w);
    if (wt > 0 && wt < best) best = wt;
  }
  return best;
}

}  // namespace ce::testing
