#include "ce/kernels.hpp"

#include <bit>
#include <cstdlib>
#include <cstring>

namespace ce::kernels {

namespace {

inline double sign_of(uint64_t bits) {
  return (std::popcount(bits) & 1) ? -1.0 : 1.0;
}

void phase_by_weight_scalar(cd* amps, size_t m, const cd* phase_table) {
  for (size_t i = 0; i < m; ++i) {
    amps[i] *= phase_table[std::popcount(i)];
  }
}

void pauli_apply_scalar(cd* dst, const cd* src, size_t m, uint64_t x_mask,
                        uint64_t z_mask, cd base) {
  if (x_mask == 0) {
    for (size_t i = 0; i < m; ++i) {
      dst[i] = base * sign_of(i & z_mask) * src[i];
    }
    return;
  }
  for (size_t i = 0; i < m; ++i) {
    const size_t j = i ^ x_mask;
    dst[i] = base * sign_of(j & z_mask) * src[j];
  }
}

cd pauli_expectation_scalar(const cd* amps, size_t m, uint64_t x_mask,
                            uint64_t z_mask, cd base) {
  cd acc = 0.0;
  for (size_t i = 0; i < m; ++i) {
    const size_t j = i ^ x_mask;
    acc += std::conj(amps[i]) * (sign_of(j & z_mask) * amps[j]);
  }
  return base * acc;
}

double pauli_project_scalar(cd* dst, const cd* src, size_t m, uint64_t x_mask,
                            uint64_t z_mask, cd base, int sign) {
  const cd sb = (sign >= 0 ? 1.0 : -1.0) * base;
  double norm = 0.0;
  for (size_t i = 0; i < m; ++i) {
    const size_t j = i ^ x_mask;
    const cd v = 0.5 * (src[i] + sb * sign_of(j & z_mask) * src[j]);
    dst[i] = v;
    norm += std::norm(v);
  }
  return norm;
}

cd inner_scalar(const cd* a, const cd* b, size_t m) {
  cd acc = 0.0;
  for (size_t i = 0; i < m; ++i) {
    acc += std::conj(a[i]) * b[i];
  }
  return acc;
}

double norm2_scalar(const cd* a, size_t m) {
  double acc = 0.0;
  for (size_t i = 0; i < m; ++i) {
    acc += std::norm(a[i]);
  }
  return acc;
}

void scale_scalar(cd* a, size_t m, cd factor) {
  for (size_t i = 0; i < m; ++i) {
    a[i] *= factor;
  }
}

void weight_mass_scalar(const cd* a, size_t m, double* out) {
  for (size_t i = 0; i < m; ++i) {
    out[std::popcount(i)] += std::norm(a[i]);
  }
}

constexpr Impl kScalar = {
    "scalar",
    phase_by_weight_scalar,
    pauli_apply_scalar,
    pauli_expectation_scalar,
    pauli_project_scalar,
    inner_scalar,
    norm2_scalar,
    scale_scalar,
    weight_mass_scalar,
};

const Impl* select_active() {
  const char* forced = std::getenv("CE_KERNELS");
  if (forced != nullptr) {
    if (std::strcmp(forced, "scalar") == 0) return &kScalar;
    if (std::strcmp(forced, "avx2") == 0) {
      const Impl* v = avx2_impl();
      return v != nullptr ? v : &kScalar;
    }
  }
  const Impl* v = avx2_impl();
  return v != nullptr ? v : &kScalar;
}

}  // namespace

const Impl& scalar_impl() { return kScalar; }

#if defined(CE_HAVE_AVX2_TU)
extern const Impl kAvx2Table;
#endif

const Impl* avx2_impl() {
#if defined(CE_HAVE_AVX2_TU) && defined(__GNUC__)
  if (__builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma")) {
    return &kAvx2Table;
  }
#endif
  return nullptr;
}

const Impl& active() {
  static const Impl* chosen = select_active();
  return *chosen;
}

std::vector<const Impl*> available_impls() {
  std::vector<const Impl*> impls{&kScalar};
  if (const Impl* v = avx2_impl()) impls.push_back(v);
  return impls;
}

}  // namespace ce::kernels
