// AVX2 variants of the dense amplitude kernels. This translation unit is
// compiled with -mavx2 -mfma; the dispatcher only hands out the table after a
// runtime CPU feature check. Amplitudes are interleaved (re, im) doubles, so
// one 256-bit vector holds two complex values.

#include "ce/kernels.hpp"

#if defined(CE_HAVE_AVX2_TU)

#include <immintrin.h>

#include <bit>
#include <cstdint>

namespace ce::kernels {

namespace {

inline __m256d cmul(__m256d a, __m256d b) {
  const __m256d b_re = _mm256_movedup_pd(b);
  const __m256d b_im = _mm256_permute_pd(b, 0xF);
  const __m256d a_sw = _mm256_permute_pd(a, 0x5);
  return _mm256_fmaddsub_pd(a, b_re, _mm256_mul_pd(a_sw, b_im));
}

inline __m256d conj2(__m256d a) {
  const __m256d mask =
      _mm256_castsi256_pd(_mm256_setr_epi64x(0, INT64_MIN, 0, INT64_MIN));
  return _mm256_xor_pd(a, mask);
}

// Per-complex negation patterns indexed by (sign bit of lane 0) | (lane 1)<<1.
inline __m256d neg_pattern(int idx) {
  alignas(32) static const uint64_t tbl[4][4] = {
      {0, 0, 0, 0},
      {0x8000000000000000ULL, 0x8000000000000000ULL, 0, 0},
      {0, 0, 0x8000000000000000ULL, 0x8000000000000000ULL},
      {0x8000000000000000ULL, 0x8000000000000000ULL, 0x8000000000000000ULL,
       0x8000000000000000ULL},
  };
  return _mm256_load_pd(reinterpret_cast<const double*>(tbl[idx]));
}

inline __m256d broadcast_c(cd v) {
  return _mm256_broadcast_pd(reinterpret_cast<const __m128d*>(&v));
}

inline cd hsum_c(__m256d v) {
  alignas(32) double t[4];
  _mm256_store_pd(t, v);
  return {t[0] + t[2], t[1] + t[3]};
}

inline double hsum_d(__m256d v) {
  alignas(32) double t[4];
  _mm256_store_pd(t, v);
  return t[0] + t[1] + t[2] + t[3];
}

inline int parity(uint64_t bits) { return std::popcount(bits) & 1; }

// Loads the two source complexes {src[i ^ x], src[i+1 ^ x]} for even i.
inline __m256d load_xored(const cd* src, size_t i, uint64_t x_mask) {
  if ((x_mask & 1) == 0) {
    return _mm256_loadu_pd(
        reinterpret_cast<const double*>(src + (i ^ x_mask)));
  }
  const __m256d v = _mm256_loadu_pd(
      reinterpret_cast<const double*>(src + (i ^ (x_mask & ~1ULL))));
  return _mm256_permute2f128_pd(v, v, 0x01);
}

void phase_by_weight_avx2(cd* amps, size_t m, const cd* phase_table) {
  for (size_t i = 0; i < m; i += 2) {
    const __m128d p0 = _mm_loadu_pd(
        reinterpret_cast<const double*>(phase_table + std::popcount(i)));
    const __m128d p1 = _mm_loadu_pd(
        reinterpret_cast<const double*>(phase_table + std::popcount(i + 1)));
    const __m256d ph = _mm256_set_m128d(p1, p0);
    const __m256d v = _mm256_loadu_pd(reinterpret_cast<const double*>(amps + i));
    _mm256_storeu_pd(reinterpret_cast<double*>(amps + i), cmul(v, ph));
  }
}

void pauli_apply_avx2(cd* dst, const cd* src, size_t m, uint64_t x_mask,
                      uint64_t z_mask, cd base) {
  const __m256d vb = broadcast_c(base);
  for (size_t i = 0; i < m; i += 2) {
    const int idx = parity((i ^ x_mask) & z_mask) |
                    (parity(((i + 1) ^ x_mask) & z_mask) << 1);
    __m256d v = load_xored(src, i, x_mask);
    v = _mm256_xor_pd(v, neg_pattern(idx));
    _mm256_storeu_pd(reinterpret_cast<double*>(dst + i), cmul(v, vb));
  }
}

cd pauli_expectation_avx2(const cd* amps, size_t m, uint64_t x_mask,
                          uint64_t z_mask, cd base) {
  __m256d acc = _mm256_setzero_pd();
  for (size_t i = 0; i < m; i += 2) {
    const int idx = parity((i ^ x_mask) & z_mask) |
                    (parity(((i + 1) ^ x_mask) & z_mask) << 1);
    __m256d g = load_xored(amps, i, x_mask);
    g = _mm256_xor_pd(g, neg_pattern(idx));
    const __m256d a =
        _mm256_loadu_pd(reinterpret_cast<const double*>(amps + i));
    acc = _mm256_add_pd(acc, cmul(conj2(a), g));
  }
  return base * hsum_c(acc);
}

double pauli_project_avx2(cd* dst, const cd* src, size_t m, uint64_t x_mask,
                          uint64_t z_mask, cd base, int sign) {
  const cd sb = (sign >= 0 ? 1.0 : -1.0) * base;
  const __m256d vsb = broadcast_c(sb);
  const __m256d half = _mm256_set1_pd(0.5);
  __m256d nacc = _mm256_setzero_pd();
  for (size_t i = 0; i < m; i += 2) {
    const int idx = parity((i ^ x_mask) & z_mask) |
                    (parity(((i + 1) ^ x_mask) & z_mask) << 1);
    __m256d g = load_xored(src, i, x_mask);
    g = _mm256_xor_pd(g, neg_pattern(idx));
    const __m256d v =
        _mm256_loadu_pd(reinterpret_cast<const double*>(src + i));
    const __m256d u = _mm256_mul_pd(half, _mm256_add_pd(v, cmul(g, vsb)));
    _mm256_storeu_pd(reinterpret_cast<double*>(dst + i), u);
    nacc = _mm256_fmadd_pd(u, u, nacc);
  }
  return hsum_d(nacc);
}

cd inner_avx2(const cd* a, const cd* b, size_t m) {
  __m256d acc = _mm256_setzero_pd();
  for (size_t i = 0; i < m; i += 2) {
    const __m256d va = _mm256_loadu_pd(reinterpret_cast<const double*>(a + i));
    const __m256d vb = _mm256_loadu_pd(reinterpret_cast<const double*>(b + i));
    acc = _mm256_add_pd(acc, cmul(conj2(va), vb));
  }
  return hsum_c(acc);
}

double norm2_avx2(const cd* a, size_t m) {
  __m256d acc = _mm256_setzero_pd();
  for (size_t i = 0; i < m; i += 2) {
    const __m256d v = _mm256_loadu_pd(reinterpret_cast<const double*>(a + i));
    acc = _mm256_fmadd_pd(v, v, acc);
  }
  return hsum_d(acc);
}

void scale_avx2(cd* a, size_t m, cd factor) {
  const __m256d vf = broadcast_c(factor);
  for (size_t i = 0; i < m; i += 2) {
    const __m256d v = _mm256_loadu_pd(reinterpret_cast<const double*>(a + i));
    _mm256_storeu_pd(reinterpret_cast<double*>(a + i), cmul(v, vf));
  }
}

void weight_mass_fallback(const cd* a, size_t m, double* out) {
  scalar_impl().weight_mass(a, m, out);
}

}  // namespace

extern const Impl kAvx2Table;
const Impl kAvx2Table = {
    "avx2",
    phase_by_weight_avx2,
    pauli_apply_avx2,
    pauli_expectation_avx2,
    pauli_project_avx2,
    inner_avx2,
    norm2_avx2,
    scale_avx2,
    weight_mass_fallback,
};

}  // namespace ce::kernels

#endif  // CE_HAVE_AVX2_TU
