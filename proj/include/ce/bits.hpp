#pragma once

#include <bit>
#include <cstdint>

namespace ce {

// Bit vector over up to 128 qubit positions. Bit j corresponds to qubit j;
// the largest family instance handled here has 2^(6+1) = 128 qubits.
struct QubitMask {
  uint64_t lo = 0;  // qubits 0..63
  uint64_t hi = 0;  // qubits 64..127

  static constexpr int capacity = 128;

  constexpr bool test(int j) const {
    return j < 64 ? (lo >> j) & 1ULL : (hi >> (j - 64)) & 1ULL;
  }
  constexpr void set(int j) {
    if (j < 64) {
      lo |= 1ULL << j;
    } else {
      hi |= 1ULL << (j - 64);
    }
  }
  constexpr void flip(int j) {
    if (j < 64) {
      lo ^= 1ULL << j;
    } else {
      hi ^= 1ULL << (j - 64);
    }
  }

  constexpr int popcount() const {
    return std::popcount(lo) + std::popcount(hi);
  }
  constexpr int parity() const { return popcount() & 1; }
  constexpr bool any() const { return (lo | hi) != 0; }
  constexpr bool none() const { return !any(); }

  // Index of the lowest set bit; undefined when none().
  constexpr int lowest() const {
    return lo != 0 ? std::countr_zero(lo) : 64 + std::countr_zero(hi);
  }

  friend constexpr QubitMask operator&(QubitMask a, QubitMask b) {
    return {a.lo & b.lo, a.hi & b.hi};
  }
  friend constexpr QubitMask operator|(QubitMask a, QubitMask b) {
    return {a.lo | b.lo, a.hi | b.hi};
  }
  friend constexpr QubitMask operator^(QubitMask a, QubitMask b) {
    return {a.lo ^ b.lo, a.hi ^ b.hi};
  }
  constexpr QubitMask& operator^=(QubitMask o) {
    lo ^= o.lo;
    hi ^= o.hi;
    return *this;
  }
  friend constexpr bool operator==(QubitMask a, QubitMask b) {
    return a.lo == b.lo && a.hi == b.hi;
  }
};

}  // namespace ce
