#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace ce::kernels {

using cd = std::complex<double>;

// Inner loops over dense amplitude arrays. Masks are in index space (bit b of
// an amplitude index). A Pauli acts as
//
//   (g psi)[i] = base * (-1)^popcount((i ^ x_mask) & z_mask) * psi[i ^ x_mask]
//
// where base carries the operator's global phase. All sizes are powers of two
// and at least 2.
struct Impl {
  const char* name;

  // amps[i] *= phase_table[popcount(i)]; in place.
  void (*phase_by_weight)(cd* amps, size_t m, const cd* phase_table);

  // dst = g src. dst must not alias src unless x_mask == 0.
  void (*pauli_apply)(cd* dst, const cd* src, size_t m, uint64_t x_mask,
                      uint64_t z_mask, cd base);

  // <psi| g |psi>.
  cd (*pauli_expectation)(const cd* amps, size_t m, uint64_t x_mask,
                          uint64_t z_mask, cd base);

  // dst = (src + sign * g src) / 2; returns the squared norm of dst.
  // Same aliasing rule as pauli_apply.
  double (*pauli_project)(cd* dst, const cd* src, size_t m, uint64_t x_mask,
                          uint64_t z_mask, cd base, int sign);

  // sum_i conj(a[i]) b[i].
  cd (*inner)(const cd* a, const cd* b, size_t m);

  double (*norm2)(const cd* a, size_t m);

  void (*scale)(cd* a, size_t m, cd factor);

  // out[w] += sum of |a[i]|^2 over indices with popcount(i) == w.
  // Caller zeroes out.
  void (*weight_mass)(const cd* a, size_t m, double* out);
};

const Impl& scalar_impl();

// AVX2 variant; nullptr when the binary or the host CPU lacks support.
const Impl* avx2_impl();

// Runtime selection: AVX2 when available, else scalar. The environment
// variable CE_KERNELS=scalar|avx2 forces a choice (unsupported forced choices
// fall back to scalar).
const Impl& active();

// All implementations usable on this host, for equivalence testing.
std::vector<const Impl*> available_impls();

}  // namespace ce::kernels
