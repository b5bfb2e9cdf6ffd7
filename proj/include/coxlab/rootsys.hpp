#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "coxlab/poset.hpp"

namespace coxlab {

/// Positive roots of a finite irreducible root system, Bourbaki numbering.
///
/// D_n: 1 - 2 - ... - (n-2), with n-1 and n both attached to n-2.
/// E_6 / E_7: 1 - 3 - 4 - 5 - 6 (- 7), with 2 attached to 4.
struct RootSystem {
  char type = 'A';
  int rank = 0;
  std::vector<std::vector<int>> cartan;     // cartan[i][j] = <alpha_i, alpha_j^vee>
  std::vector<std::vector<int>> positive;   // coefficient vectors, sorted by height then lexicographically
  std::vector<int> heights;

  std::size_t highest_root_index() const { return positive.size() - 1; }
  const std::vector<int>& highest_root() const { return positive.back(); }
};

std::vector<std::vector<int>> cartan_matrix(char type, int rank);

/// Positive roots by height induction with root strings. Throws
/// InvalidArgument for unsupported (type, rank).
RootSystem build_root_system(char type, int rank);

/// Height of the highest root plus one.
int coxeter_number(const RootSystem& rs);

/// 1-based indices i with coefficient 1 in the highest root.
std::vector<int> cominuscule_roots(const RootSystem& rs);

/// Covers beta < beta + alpha_i; labels are the coefficient digits.
Poset root_poset(const RootSystem& rs);

enum class ShapeTag { I, II, III, E6, E7 };
std::string to_string(ShapeTag tag);

struct CominusculeData {
  int root_index;  // 1-based
  Poset poset;
  ShapeTag shape;
};

/// The interval [sigma_i, eta] of the root poset, with its shape.
CominusculeData cominuscule_poset(const RootSystem& rs, int i);

/// Reference shapes used for classification.
/// Shifted staircase {(i,j) : 1 <= i <= j <= k} under the product order.
Poset shifted_staircase(int k);
/// Chain of k, two incomparable elements, chain of k (2k+2 elements).
Poset fork_poset(int k);
/// Dynkin diagram D_k oriented as a poset: a chain of k-2 below two maxima.
Poset d_tree_poset(int k);

}  // namespace coxlab
