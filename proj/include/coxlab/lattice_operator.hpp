#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "coxlab/ideal_lattice.hpp"
#include "coxlab/int_matrix.hpp"
#include "coxlab/k0lin.hpp"
#include "coxlab/simd/kernels.hpp"

namespace coxlab {

/// The Coxeter transformation of J(P) applied without forming Z or Z^{-1}.
///
/// J(P) is the product of per-element difference operators: Z^{-1} is
/// "lower -= upper" along the cover edges of each base element, ascending,
/// and Z^T is "upper += lower" along the same edges, ascending. Each pass
/// costs one row operation per cover edge of J(P).
class CoxeterOperator {
 public:
  explicit CoxeterOperator(const IdealLattice& lattice);

  std::size_t size() const noexcept { return n_; }

  /// Phi v, exactly.
  K0Vector apply(std::span<const Integer> v) const;

  /// The full matrix, column by column.
  IntMatrix dense() const;

  /// Same result as find_signed_order(dense(), k_max), computed on blocks
  /// of identity columns: int8 lanes first, a block that outgrows them is
  /// redone in int16 and then in int64, and one that outgrows 61 bits sends the whole search
  /// to the exact dense path.
  SignedOrder find_signed_order(std::size_t k_max) const;
  SignedOrder find_signed_order() const { return find_signed_order(default_order_bound(n_)); }

  /// Same, pinned to one kernel variant (for equivalence tests).
  SignedOrder find_signed_order(std::size_t k_max, const simd::Kernels& kernels) const;

  /// Psi = -Phi applied in place to an N x width row-major block. Throws
  /// Overflow once an entry reaches 2^6 (int8), 2^14 (int16) or 2^61
  /// (int64). Vector kernels need width % simd::kWidthQuantum == 0.
  void apply_psi_block(std::int8_t* block, std::size_t width, const simd::Kernels& kernels) const;
  void apply_psi_block(std::int16_t* block, std::size_t width, const simd::Kernels& kernels) const;
  void apply_psi_block(std::int64_t* block, std::size_t width, const simd::Kernels& kernels) const;

 private:
  std::size_t n_;
  std::vector<simd::EdgePair> edges_;  // grouped by base element, ascending
};

}  // namespace coxlab
