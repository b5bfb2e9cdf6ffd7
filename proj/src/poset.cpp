#include "coxlab/poset.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

#include "coxlab/error.hpp"

namespace coxlab {

namespace {

// Kahn's algorithm, smallest label first among available elements.
std::vector<Element> label_ordered_linear_extension(
    const std::vector<std::string>& labels, const std::vector<std::vector<Element>>& up) {
  const std::size_t n = labels.size();
  std::vector<std::size_t> indeg(n, 0);
  for (const auto& ups : up)
    for (Element u : ups) ++indeg[u];
  auto cmp = [&](Element a, Element b) {
    if (labels[a] != labels[b]) return labels[a] > labels[b];
    return a > b;
  };
  std::priority_queue<Element, std::vector<Element>, decltype(cmp)> ready(cmp);
  for (Element x = 0; x < n; ++x)
    if (indeg[x] == 0) ready.push(x);
  std::vector<Element> order;
  order.reserve(n);
  while (!ready.empty()) {
    Element x = ready.top();
    ready.pop();
    order.push_back(x);
    for (Element u : up[x])
      if (--indeg[u] == 0) ready.push(u);
  }
  if (order.size() != n) throw InvalidArgument("relation contains a cycle");
  return order;
}

}  // namespace

Poset Poset::from_covers(std::vector<std::string> labels,
                         const std::vector<std::pair<Element, Element>>& covers) {
  const std::size_t n = labels.size();
  if (n == 0) throw InvalidArgument("empty poset is not supported");
  std::vector<std::vector<Element>> up(n);
  for (auto [lo, hi] : covers) {
    if (lo >= n || hi >= n) throw InvalidArgument("cover refers to a missing element");
    if (lo == hi) throw InvalidArgument("an element cannot cover itself");
    up[lo].push_back(hi);
  }
  const auto order = label_ordered_linear_extension(labels, up);
  std::vector<Element> pos(n);
  for (std::size_t i = 0; i < n; ++i) pos[order[i]] = i;

  // Close transitively in the new order, then keep only genuine covers.
  std::vector<Bitset> down(n, Bitset(n));
  std::vector<std::vector<Element>> lower(n);
  for (auto [lo, hi] : covers) lower[pos[hi]].push_back(pos[lo]);
  for (Element x = 0; x < n; ++x) {
    down[x].set(x);
    for (Element c : lower[x]) down[x] |= down[c];
  }
  Poset p;
  p.labels_.resize(n);
  for (std::size_t i = 0; i < n; ++i) p.labels_[i] = std::move(labels[order[i]]);
  p.lower_.assign(n, {});
  for (Element x = 0; x < n; ++x) {
    Bitset covered(n);
    auto strict = down[x];
    strict.reset(x);
    auto members = strict.members();
    for (auto it = members.rbegin(); it != members.rend(); ++it) {
      if (covered.test(*it)) continue;
      p.lower_[x].push_back(*it);
      covered |= down[*it];
    }
    std::sort(p.lower_[x].begin(), p.lower_[x].end());
  }
  p.down_ = std::move(down);
  p.finish_from_lower_covers();
  return p;
}

Poset Poset::from_relation(std::vector<std::string> labels,
                           const std::vector<std::vector<bool>>& leq) {
  const std::size_t n = labels.size();
  if (n == 0) throw InvalidArgument("empty poset is not supported");
  if (leq.size() != n) throw InvalidArgument("relation has the wrong size");
  for (const auto& row : leq)
    if (row.size() != n) throw InvalidArgument("relation has the wrong size");
  for (std::size_t a = 0; a < n; ++a) {
    if (!leq[a][a]) throw InvalidArgument("relation is not reflexive");
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a]) throw InvalidArgument("relation is not antisymmetric");
      if (!leq[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (leq[b][c] && !leq[a][c]) throw InvalidArgument("relation is not transitive");
    }
  }
  std::vector<std::pair<Element, Element>> covers;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b || !leq[a][b]) continue;
      bool is_cover = true;
      for (std::size_t c = 0; c < n && is_cover; ++c)
        if (c != a && c != b && leq[a][c] && leq[c][b]) is_cover = false;
      if (is_cover) covers.emplace_back(a, b);
    }
  return from_covers(std::move(labels), covers);
}

Poset Poset::from_ordered_covers(std::vector<std::string> labels,
                                 std::vector<std::vector<Element>> lower_covers) {
  const std::size_t n = labels.size();
  if (n == 0) throw InvalidArgument("empty poset is not supported");
  if (lower_covers.size() != n) throw InvalidArgument("cover list has the wrong size");
  Poset p;
  p.labels_ = std::move(labels);
  p.lower_ = std::move(lower_covers);
  p.down_.assign(n, Bitset(n));
  for (Element x = 0; x < n; ++x) {
    auto& lc = p.lower_[x];
    std::sort(lc.begin(), lc.end());
    p.down_[x].set(x);
    for (Element c : lc) {
      if (c >= x) throw InvalidArgument("elements are not listed along a linear extension");
      p.down_[x] |= p.down_[c];
    }
    for (Element a : lc)
      for (Element b : lc)
        if (a != b && p.down_[b].test(a))
          throw InvalidArgument("listed cover is implied by transitivity");
  }
  p.finish_from_lower_covers();
  return p;
}

void Poset::finish_from_lower_covers() {
  const std::size_t n = labels_.size();
  upper_.assign(n, {});
  cover_count_ = 0;
  for (Element x = 0; x < n; ++x)
    for (Element c : lower_[x]) {
      upper_[c].push_back(x);
      ++cover_count_;
    }
}

std::vector<std::pair<Element, Element>> Poset::covers() const {
  std::vector<std::pair<Element, Element>> out;
  out.reserve(cover_count_);
  for (Element x = 0; x < size(); ++x)
    for (Element c : lower_[x]) out.emplace_back(c, x);
  return out;
}

std::optional<Element> Poset::find_label(const std::string& label) const {
  for (Element x = 0; x < size(); ++x)
    if (labels_[x] == label) return x;
  return std::nullopt;
}

std::vector<Element> Poset::minimal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x)
    if (lower_[x].empty()) out.push_back(x);
  return out;
}

std::vector<Element> Poset::maximal_elements() const {
  std::vector<Element> out;
  for (Element x = 0; x < size(); ++x)
    if (upper_[x].empty()) out.push_back(x);
  return out;
}

Poset chain(std::size_t k) {
  if (k == 0) throw InvalidArgument("empty poset is not supported: chain(0)");
  std::vector<std::string> labels(k);
  std::vector<std::vector<Element>> lower(k);
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = std::to_string(i + 1);
    if (i > 0) lower[i] = {i - 1};
  }
  return Poset::from_ordered_covers(std::move(labels), std::move(lower));
}

Poset antichain(std::size_t k) {
  if (k == 0) throw InvalidArgument("empty poset is not supported: antichain(0)");
  std::vector<std::string> labels(k);
  for (std::size_t i = 0; i < k; ++i) labels[i] = std::to_string(i + 1);
  return Poset::from_ordered_covers(std::move(labels), std::vector<std::vector<Element>>(k));
}

Poset product(const Poset& p, const Poset& q) {
  const std::size_t np = p.size(), nq = q.size();
  std::vector<std::string> labels(np * nq);
  std::vector<std::vector<Element>> lower(np * nq);
  // Lexicographic pairs form a linear extension of the product order.
  for (Element a = 0; a < np; ++a)
    for (Element b = 0; b < nq; ++b) {
      const Element x = a * nq + b;
      labels[x] = "(" + p.label(a) + "," + q.label(b) + ")";
      for (Element c : p.lower_covers(a)) lower[x].push_back(c * nq + b);
      for (Element c : q.lower_covers(b)) lower[x].push_back(a * nq + c);
    }
  Poset out = Poset::from_ordered_covers(std::move(labels), std::move(lower));
  auto is_chain = [](const Poset& s) { return s.cover_count() + 1 == s.size() && s.maximal_elements().size() == 1 && s.minimal_elements().size() == 1; };
  if (is_chain(p) && is_chain(q))
    out.set_grid_shape({static_cast<int>(np), static_cast<int>(nq)});
  return out;
}

Poset grid(int m, int n) {
  if (m < 1 || n < 1) throw InvalidArgument("grid dimensions must be positive");
  return product(chain(static_cast<std::size_t>(m)), chain(static_cast<std::size_t>(n)));
}

Poset add_max(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::string> labels = p.labels();
  labels.push_back("top");
  std::vector<std::vector<Element>> lower(n + 1);
  for (Element x = 0; x < n; ++x) lower[x] = p.lower_covers(x);
  lower[n] = p.maximal_elements();
  return Poset::from_ordered_covers(std::move(labels), std::move(lower));
}

Poset add_min(const Poset& p) {
  const std::size_t n = p.size();
  std::vector<std::string> labels;
  labels.reserve(n + 1);
  labels.push_back("bottom");
  for (const auto& l : p.labels()) labels.push_back(l);
  std::vector<std::vector<Element>> lower(n + 1);
  for (Element x = 0; x < n; ++x) {
    if (p.lower_covers(x).empty()) {
      lower[x + 1] = {0};
    } else {
      for (Element c : p.lower_covers(x)) lower[x + 1].push_back(c + 1);
    }
  }
  return Poset::from_ordered_covers(std::move(labels), std::move(lower));
}

Poset induced(const Poset& p, const std::vector<Element>& elements) {
  if (elements.empty()) throw InvalidArgument("empty poset is not supported");
  auto sorted = elements;
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  const std::size_t k = sorted.size();
  std::vector<std::string> labels(k);
  std::vector<std::vector<Element>> lower(k);
  for (std::size_t i = 0; i < k; ++i) {
    labels[i] = p.label(sorted[i]);
    // Covers of the induced order: j < i with no intermediate member.
    for (std::size_t j = i; j-- > 0;) {
      if (!p.leq(sorted[j], sorted[i])) continue;
      bool implied = false;
      for (Element c : lower[i])
        if (p.leq(sorted[j], sorted[c])) {
          implied = true;
          break;
        }
      if (!implied) lower[i].push_back(j);
    }
  }
  return Poset::from_ordered_covers(std::move(labels), std::move(lower));
}

Poset dual(const Poset& p) {
  std::vector<std::pair<Element, Element>> covers;
  for (auto [lo, hi] : p.covers()) covers.emplace_back(hi, lo);
  return Poset::from_covers(p.labels(), covers);
}

std::vector<Element> interval_elements(const Poset& p, Element lo, Element hi) {
  if (lo >= p.size() || hi >= p.size()) throw InvalidArgument("interval endpoint out of range");
  if (!p.leq(lo, hi))
    throw InvalidArgument("empty interval: " + p.label(lo) + " is not below " + p.label(hi));
  std::vector<Element> out;
  for (Element x = lo; x <= hi; ++x)
    if (p.leq(lo, x) && p.leq(x, hi)) out.push_back(x);
  return out;
}

std::optional<Element> join(const Poset& p, Element a, Element b) {
  // The first upper bound in a linear extension is minimal among upper
  // bounds; it is the join iff it lies below all of them.
  std::optional<Element> first;
  for (Element x = 0; x < p.size(); ++x) {
    if (!p.leq(a, x) || !p.leq(b, x)) continue;
    if (!first) first = x;
    else if (!p.leq(*first, x)) return std::nullopt;
  }
  return first;
}

std::optional<Element> meet(const Poset& p, Element a, Element b) {
  std::optional<Element> last;
  for (Element x = p.size(); x-- > 0;) {
    if (!p.leq(x, a) || !p.leq(x, b)) continue;
    if (!last) last = x;
    else if (!p.leq(x, *last)) return std::nullopt;
  }
  return last;
}

namespace {

std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  return out;
}

}  // namespace

std::string to_dot(const Poset& p, const std::string& name) {
  std::ostringstream os;
  os << "digraph " << name << " {\n";
  for (Element x = 0; x < p.size(); ++x)
    os << "v" << x << " [label=\"" << dot_escape(p.label(x)) << "\"];\n";
  for (auto [lo, hi] : p.covers()) os << "v" << hi << " -> v" << lo << ";\n";
  os << "}\n";
  return os.str();
}

std::vector<int> ranks(const Poset& p) {
  std::vector<int> r(p.size(), 0);
  for (Element x = 0; x < p.size(); ++x)
    for (Element c : p.lower_covers(x)) r[x] = std::max(r[x], r[c] + 1);
  return r;
}

}  // namespace coxlab
