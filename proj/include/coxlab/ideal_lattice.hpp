#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxlab/bitset.hpp"
#include "coxlab/poset.hpp"

namespace coxlab {

/// Default cap on the number of enumerated order ideals.
inline constexpr std::size_t kDefaultIdealCap = 20000;

/// The distributive lattice J(P) of order ideals of a base poset P.
///
/// Lattice elements are sorted lexicographically by partition when P is a
/// grid, otherwise by (cardinality, sorted member list).
class IdealLattice {
 public:
  /// Cover edge of J(P): `upper` = `lower` plus the base element `added`.
  struct Edge {
    Element upper;
    Element lower;
  };

  IdealLattice(Poset base, std::size_t cap = kDefaultIdealCap);

  const Poset& base() const noexcept { return base_; }
  const Poset& lattice() const noexcept { return lattice_; }
  std::size_t size() const noexcept { return lattice_.size(); }

  const Bitset& ideal(Element x) const { return ideals_[x]; }
  std::vector<Element> ideal_of(Element x) const { return ideals_[x].members(); }

  /// Cover edges grouped by the base element that is added, in base order.
  const std::vector<std::vector<Edge>>& edges_by_base_element() const noexcept { return edges_; }

  Element bottom() const noexcept { return 0; }
  Element top() const noexcept { return size() - 1; }

  /// Partition label of each element; only for grid bases.
  bool is_grid() const noexcept { return base_.grid_shape().has_value(); }
  GridShape shape() const;
  const std::vector<int>& parts(Element x) const { return parts_.at(x); }

  /// Looks up a partition (a_1 <= ... <= a_m). Throws LookupError.
  Element index_of(const std::vector<int>& parts) const;
  std::optional<Element> find(const std::vector<int>& parts) const;

 private:
  Poset base_;
  Poset lattice_;
  std::vector<Bitset> ideals_;
  std::vector<std::vector<int>> parts_;  // sorted, so lookups bisect
  std::vector<std::vector<Edge>> edges_;
};

/// Builds J(P). Throws ResourceLimit when more than `cap` ideals exist.
IdealLattice ideal_lattice(const Poset& p, std::size_t cap = kDefaultIdealCap);

std::string partition_label(const std::vector<int>& parts);

}  // namespace coxlab
