#pragma once

#include <cstddef>
#include <vector>

#include "coxlab/int_matrix.hpp"
#include "coxlab/poset.hpp"

namespace coxlab {

/// Coordinates in the simple-module basis, indexed by canonical element order.
using K0Vector = std::vector<Integer>;

/// m^k = sign * I with k minimal; exact_order is k or 2k.
struct SignedOrder {
  std::size_t k = 0;
  int sign = 1;
  std::size_t exact_order = 0;
  friend bool operator==(const SignedOrder&, const SignedOrder&) = default;
};

/// Z[b][a] = 1 iff b <= a. Column a is the projective class of a.
IntMatrix zeta_matrix(const Poset& p);

/// Z^{-1}, by back-substitution along the linear extension.
IntMatrix mobius_matrix(const Poset& p);

/// Phi = -Z^T Z^{-1}, acting on column vectors in the simple basis.
IntMatrix coxeter_matrix(const Poset& p);

/// Indicator of {b : b <= a}.
K0Vector projective_class(const Poset& p, Element a);
/// Indicator of {c : c >= a}.
K0Vector injective_class(const Poset& p, Element a);

/// Default search bound: 4 times the matrix size.
inline std::size_t default_order_bound(std::size_t n) { return 4 * n; }

/// Smallest k <= k_max with m^k = +-I. Throws NotPeriodic otherwise.
SignedOrder find_signed_order(const IntMatrix& m, std::size_t k_max);
inline SignedOrder find_signed_order(const IntMatrix& m) {
  return find_signed_order(m, default_order_bound(m.rows()));
}

/// Folds a (k, sign) pair into a SignedOrder.
SignedOrder make_signed_order(std::size_t k, int sign);

/// Determinant is +1 or -1.
bool is_unimodular(const IntMatrix& m);

/// p(x) equals +-x^n p(1/x).
bool is_palindromic_up_to_sign(const std::vector<Integer>& poly);

}  // namespace coxlab
