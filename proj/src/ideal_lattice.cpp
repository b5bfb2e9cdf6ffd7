#include "coxlab/ideal_lattice.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "coxlab/error.hpp"

namespace coxlab {

namespace {

// Depth-first walk over the base elements in index order (a linear
// extension): element i may join the ideal only if its lower covers have.
class IdealEnumerator {
 public:
  IdealEnumerator(const Poset& p, std::size_t cap) : p_(p), cap_(cap), current_(p.size()) {}

  std::vector<Bitset> run() {
    visit(0);
    return std::move(out_);
  }

 private:
  void visit(Element i) {
    // elements that cannot join are skipped without branching
    while (i < p_.size() && !addable(i)) ++i;
    if (i == p_.size()) {
      if (out_.size() == cap_) throw ResourceLimit("order ideal enumeration exceeded the size cap", cap_);
      out_.push_back(current_);
      return;
    }
    visit(i + 1);
    current_.set(i);
    visit(i + 1);
    current_.reset(i);
  }

  bool addable(Element i) const {
    const auto& lc = p_.lower_covers(i);
    return std::all_of(lc.begin(), lc.end(), [&](Element c) { return current_.test(c); });
  }

  const Poset& p_;
  std::size_t cap_;
  Bitset current_;
  std::vector<Bitset> out_;
};

std::vector<int> grid_parts(const Bitset& ideal, GridShape shape) {
  std::vector<int> row_count(static_cast<std::size_t>(shape.rows), 0);
  ideal.for_each([&](std::size_t e) { ++row_count[e / static_cast<std::size_t>(shape.cols)]; });
  // Rows read from the last grid row to the first give a non-decreasing sequence.
  std::vector<int> parts(row_count.rbegin(), row_count.rend());
  return parts;
}

}  // namespace

std::string partition_label(const std::vector<int>& parts) {
  std::string s;
  s.reserve(2 + 4 * parts.size());
  s += '(';
  char buf[16];
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) s += ',';
    const auto r = std::to_chars(buf, buf + sizeof buf, parts[i]);
    s.append(buf, r.ptr);
  }
  s += ')';
  return s;
}

IdealLattice::IdealLattice(Poset base, std::size_t cap)
    : base_(std::move(base)), lattice_(chain(1)) {
  auto found = IdealEnumerator(base_, cap).run();
  const std::size_t n = found.size();

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<std::vector<int>> parts;
  if (is_grid()) {
    parts.reserve(n);
    for (const auto& ideal : found) parts.push_back(grid_parts(ideal, *base_.grid_shape()));
    if (base_.grid_shape()->cols < 0x10000) {
      // big-endian byte strings sort like the vectors and compare with memcmp
      std::vector<std::string> keys(n);
      for (std::size_t i = 0; i < n; ++i) {
        keys[i].resize(2 * parts[i].size());
        char* out = keys[i].data();
        for (int v : parts[i]) {
          *out++ = static_cast<char>(v >> 8);
          *out++ = static_cast<char>(v & 0xff);
        }
      }
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
    } else {
      std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return parts[a] < parts[b]; });
    }
  } else {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> keys;
    keys.reserve(n);
    for (const auto& ideal : found) keys.emplace_back(ideal.count(), ideal.members());
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  }

  ideals_.reserve(n);
  for (std::size_t i : order) ideals_.push_back(std::move(found[i]));
  if (is_grid()) {
    parts_.reserve(n);
    for (std::size_t i : order) parts_.push_back(std::move(parts[i]));
  }

  std::unordered_map<Bitset, Element, BitsetHash> by_ideal;
  by_ideal.reserve(n);
  for (Element x = 0; x < n; ++x) by_ideal.emplace(ideals_[x], x);

  edges_.assign(base_.size(), {});
  std::vector<std::vector<Element>> lower(n);
  std::vector<std::string> labels(n);
  for (Element x = 0; x < n; ++x) {
    const Bitset& ideal = ideals_[x];
    ideal.for_each([&](std::size_t e) {
      for (Element u : base_.upper_covers(e))
        if (ideal.test(u)) return;
      Bitset smaller = ideal;
      smaller.reset(e);
      const Element y = by_ideal.at(smaller);
      lower[x].push_back(y);
      edges_[e].push_back({x, y});
    });
    if (is_grid()) {
      labels[x] = partition_label(parts_[x]);
    } else {
      std::string s = "{";
      bool first = true;
      ideal.for_each([&](std::size_t e) {
        if (!first) s += ",";
        first = false;
        s += base_.label(e);
      });
      labels[x] = s + "}";
    }
  }
  lattice_ = Poset::from_ordered_covers(std::move(labels), std::move(lower));
}

GridShape IdealLattice::shape() const {
  if (!is_grid()) throw InvalidArgument("ideal lattice base is not a grid");
  return *base_.grid_shape();
}

std::optional<Element> IdealLattice::find(const std::vector<int>& parts) const {
  auto it = std::lower_bound(parts_.begin(), parts_.end(), parts);
  if (it == parts_.end() || *it != parts) return std::nullopt;
  return static_cast<Element>(it - parts_.begin());
}

Element IdealLattice::index_of(const std::vector<int>& parts) const {
  if (auto x = find(parts)) return *x;
  throw LookupError("partition " + partition_label(parts) + " is not an element of the lattice");
}

IdealLattice ideal_lattice(const Poset& p, std::size_t cap) { return IdealLattice(p, cap); }

}  // namespace coxlab
