#include "ce/symplectic.hpp"

#include <algorithm>
#include <stdexcept>

namespace ce {

namespace {

int pivot_column(const SymplecticVector& v, int n) {
  if (v.x.any()) return v.x.lowest();
  return n + v.z.lowest();
}

// Closure of {0} + steps under addition mod 4, as a 4-bit membership mask.
uint8_t phase_closure(uint8_t mask) {
  mask |= 0x1;
  for (bool changed = true; changed;) {
    changed = false;
    for (int a = 0; a < 4; ++a) {
      if (!(mask >> a & 1)) continue;
      for (int b = 0; b < 4; ++b) {
        if (!(mask >> b & 1)) continue;
        const int c = (a + b) & 3;
        if (!(mask >> c & 1)) {
          mask |= uint8_t(1u << c);
          changed = true;
        }
      }
    }
  }
  return mask;
}

}  // namespace

SymplecticBasis::SymplecticBasis(std::span<const PauliOperator> gens) {
  if (gens.empty()) return;
  n_ = gens[0].n;
  uint8_t relations = 0x1;
  for (const auto& g : gens) {
    if (g.n != n_) throw std::invalid_argument("generator size mismatch");
    SymplecticVector v = sympl_vec(g);
    PauliOperator prod = g;
    for (size_t i = 0; i < rows_.size(); ++i) {
      if (v.test(pivots_[i], n_)) {
        v ^= rows_[i];
        prod = multiply(prod, products_[i]);
      }
    }
    if (v.none()) {
      // Dependent input: prod is i^k * I, a scalar relation.
      relations |= uint8_t(1u << (prod.phase_exp & 3));
    } else {
      insert(v, prod);
    }
    // g^2 is always a scalar; record its phase.
    relations |= uint8_t(1u << (multiply(g, g).phase_exp & 3));
  }
  for (size_t i = 0; i < gens.size(); ++i) {
    for (size_t j = i + 1; j < gens.size(); ++j) {
      if (!commutes(gens[i], gens[j])) {
        relations |= uint8_t(1u << 2);  // ghg^-1h^-1 = -I
      }
    }
  }
  phase_mask_ = phase_closure(relations);
}

void SymplecticBasis::insert(SymplecticVector v, PauliOperator prod) {
  const int piv = pivot_column(v, n_);
  // Back-eliminate the new pivot from existing rows to keep RREF.
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i].test(piv, n_)) {
      rows_[i] ^= v;
      products_[i] = multiply(products_[i], prod);
    }
  }
  const auto it = std::upper_bound(pivots_.begin(), pivots_.end(), piv);
  const size_t idx = static_cast<size_t>(it - pivots_.begin());
  pivots_.insert(it, piv);
  rows_.insert(rows_.begin() + static_cast<long>(idx), v);
  products_.insert(products_.begin() + static_cast<long>(idx), prod);
}

SymplecticVector SymplecticBasis::reduce_vector(SymplecticVector v) const {
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (v.test(pivots_[i], n_)) v ^= rows_[i];
  }
  return v;
}

SymplecticBasis::Reduction SymplecticBasis::reduce(
    const PauliOperator& p) const {
  if (n_ != 0 && p.n != n_) {
    throw std::invalid_argument("operator size mismatch");
  }
  SymplecticVector v = sympl_vec(p);
  PauliOperator prod = PauliOperator::identity(p.n);
  for (size_t i = 0; i < rows_.size(); ++i) {
    if (v.test(pivots_[i], n_)) {
      v ^= rows_[i];
      prod = multiply(prod, products_[i]);
    }
  }
  if (!v.none()) return {false, prod};
  return {true, prod};
}

bool SymplecticBasis::contains(const PauliOperator& p, bool mod_phase) const {
  if (rank() == 0) {
    if (!p.is_identity_mask()) return false;
    return mod_phase || (phase_mask_ >> (p.phase_exp & 3) & 1);
  }
  const Reduction r = reduce(p);
  if (!r.in_span) return false;
  if (mod_phase) return true;
  const int delta = ((p.phase_exp - r.product.phase_exp) % 4 + 4) & 3;
  return (phase_mask_ >> delta) & 1;
}

SymplecticBasis build_basis(std::span<const PauliOperator> gens) {
  return SymplecticBasis(gens);
}

bool in_group(const PauliOperator& e, std::span<const PauliOperator> gens,
              bool mod_phase) {
  return SymplecticBasis(gens).contains(e, mod_phase);
}

int sympl_rank(std::span<const PauliOperator> gens) {
  return SymplecticBasis(gens).rank();
}

}  // namespace ce
