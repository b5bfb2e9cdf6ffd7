#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coxlab/bitset.hpp"

namespace coxlab {

using Element = std::size_t;

/// Shape of a grid poset P_{m,n}: m rows, n columns.
struct GridShape {
  int rows = 0;
  int cols = 0;
  friend bool operator==(const GridShape&, const GridShape&) = default;
};

/// A finite poset with a dense order relation.
///
/// Element indices always follow a linear extension: leq(a, b) implies
/// a <= b as integers. Every constructor either receives elements in that
/// order (and checks it) or sorts them into it.
class Poset {
 public:
  /// Builds a poset from its cover relation. Elements are reordered into a
  /// linear extension, ties broken by label; `covers` holds (lower, upper).
  static Poset from_covers(std::vector<std::string> labels,
                           const std::vector<std::pair<Element, Element>>& covers);

  /// Builds a poset from a full relation `leq[a][b]`; validates the partial
  /// order axioms and reorders as in from_covers.
  static Poset from_relation(std::vector<std::string> labels,
                             const std::vector<std::vector<bool>>& leq);

  /// Trusted fast path: elements are already in a linear extension and
  /// `lower_covers[x]` lists the elements x covers. Throws if the order is
  /// not a linear extension.
  static Poset from_ordered_covers(std::vector<std::string> labels,
                                   std::vector<std::vector<Element>> lower_covers);

  std::size_t size() const noexcept { return labels_.size(); }

  bool leq(Element a, Element b) const noexcept { return down_[b].test(a); }
  bool lt(Element a, Element b) const noexcept { return a != b && leq(a, b); }

  const std::vector<Element>& lower_covers(Element x) const { return lower_[x]; }
  const std::vector<Element>& upper_covers(Element x) const { return upper_[x]; }

  /// All cover pairs (lower, upper), sorted by (upper, lower).
  std::vector<std::pair<Element, Element>> covers() const;
  std::size_t cover_count() const noexcept { return cover_count_; }

  const Bitset& down_set(Element x) const { return down_[x]; }

  const std::string& label(Element x) const { return labels_[x]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::optional<Element> find_label(const std::string& label) const;

  /// Set by grid() and by product() of two chains.
  const std::optional<GridShape>& grid_shape() const noexcept { return grid_; }
  void set_grid_shape(GridShape shape) { grid_ = shape; }

  std::vector<Element> minimal_elements() const;
  std::vector<Element> maximal_elements() const;

 private:
  Poset() = default;
  void finish_from_lower_covers();

  std::vector<std::string> labels_;
  std::vector<std::vector<Element>> lower_;
  std::vector<std::vector<Element>> upper_;
  std::vector<Bitset> down_;
  std::size_t cover_count_ = 0;
  std::optional<GridShape> grid_;
};

/// Total order on k elements labelled 1..k.
Poset chain(std::size_t k);

/// Antichain on k elements labelled 1..k.
Poset antichain(std::size_t k);

/// Entry-wise product order; elements labelled "(a,b)".
Poset product(const Poset& p, const Poset& q);

/// Grid poset P_{m,n} = chain(m) x chain(n), labels "(i,j)".
Poset grid(int m, int n);

/// Unique maximum added on top.
Poset add_max(const Poset& p);

/// Unique minimum added at the bottom.
Poset add_min(const Poset& p);

/// Subposet induced on `elements`.
Poset induced(const Poset& p, const std::vector<Element>& elements);

/// Order dual.
Poset dual(const Poset& p);

/// Elements x with lo <= x <= hi in canonical order. Throws InvalidArgument
/// when lo is not below hi.
std::vector<Element> interval_elements(const Poset& p, Element lo, Element hi);

/// Least upper bound, if unique.
std::optional<Element> join(const Poset& p, Element a, Element b);
/// Greatest lower bound, if unique.
std::optional<Element> meet(const Poset& p, Element a, Element b);

/// Hasse diagram in DOT, edges directed from the covering element down.
std::string to_dot(const Poset& p, const std::string& name = "P");

/// Poset isomorphism by backtracking over rank/degree-compatible candidates.
bool isomorphic(const Poset& p, const Poset& q);

/// Rank of each element: length of the longest chain ending at it.
std::vector<int> ranks(const Poset& p);

}  // namespace coxlab
