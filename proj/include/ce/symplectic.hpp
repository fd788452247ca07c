#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ce/pauli.hpp"

namespace ce {

// A Pauli's phase-free part as a 2n-bit vector: columns 0..n-1 are the X
// mask, columns n..2n-1 the Z mask.
struct SymplecticVector {
  QubitMask x{};
  QubitMask z{};

  bool test(int col, int n) const {
    return col < n ? x.test(col) : z.test(col - n);
  }
  bool none() const { return x.none() && z.none(); }
  SymplecticVector& operator^=(const SymplecticVector& o) {
    x ^= o.x;
    z ^= o.z;
    return *this;
  }
  friend bool operator==(const SymplecticVector& a, const SymplecticVector& b) {
    return a.x == b.x && a.z == b.z;
  }
};

inline SymplecticVector sympl_vec(const PauliOperator& p) {
  return {p.x, p.z};
}

// Symplectic inner product: 0 = commute, 1 = anticommute.
inline int sympl_product(const SymplecticVector& a, const SymplecticVector& b) {
  return ((a.x & b.z).popcount() + (a.z & b.x).popcount()) & 1;
}

// Reduced row-echelon basis of the GF(2) span of a generator list, with the
// Pauli product realizing each row kept alongside so membership checks can
// reconstruct exact phases.
//
// phase_mask records which scalars i^k the generated group contains (bit k
// set iff i^k * I is a group element); it is derived from dependent inputs,
// generator squares, and anticommuting generator pairs.
class SymplecticBasis {
 public:
  SymplecticBasis() = default;
  explicit SymplecticBasis(std::span<const PauliOperator> gens);

  int n() const { return n_; }
  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<SymplecticVector>& rows() const { return rows_; }
  const std::vector<PauliOperator>& row_products() const { return products_; }
  uint8_t phase_mask() const { return phase_mask_; }

  // Residual of v after elimination against the basis (canonical coset
  // representative; zero iff v is in the span).
  SymplecticVector reduce_vector(SymplecticVector v) const;

  struct Reduction {
    bool in_span = false;
    PauliOperator product;  // product of used rows; masks equal p's on success
  };
  Reduction reduce(const PauliOperator& p) const;

  bool contains_vector(const SymplecticVector& v) const {
    return reduce_vector(v).none();
  }
  // Group membership. mod_phase = true tests span membership only;
  // mod_phase = false additionally requires the phase to be attainable.
  bool contains(const PauliOperator& p, bool mod_phase) const;

 private:
  void insert(SymplecticVector v, PauliOperator prod);

  int n_ = 0;
  std::vector<SymplecticVector> rows_;   // sorted by pivot column
  std::vector<PauliOperator> products_;  // parallel to rows_
  std::vector<int> pivots_;
  uint8_t phase_mask_ = 0x1;
};

SymplecticBasis build_basis(std::span<const PauliOperator> gens);

bool in_group(const PauliOperator& e, std::span<const PauliOperator> gens,
              bool mod_phase);

// GF(2) rank of the symplectic vectors of a generator list.
int sympl_rank(std::span<const PauliOperator> gens);

}  // namespace ce
