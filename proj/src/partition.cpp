#include "coxlab/partition.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <tuple>

#include "coxlab/error.hpp"

namespace coxlab {

PlainPartition::PlainPartition(int m, int n, std::vector<int> parts) : m_(m), n_(n), parts_(std::move(parts)) {
  if (m < 1 || n < 1) throw InvalidArgument("partition box needs m, n >= 1");
  if (static_cast<int>(parts_.size()) != m) throw InvalidArgument("partition must have exactly m parts");
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0 || parts_[i] > n) throw InvalidArgument("partition part outside [0, n]");
    if (i && parts_[i] < parts_[i - 1]) throw InvalidArgument("partition must be non-decreasing");
  }
}

EnhancedPartition::EnhancedPartition(int m, int n, int alpha0, std::vector<Block> blocks, int alpha_last)
    : m_(m), n_(n), alpha0_(alpha0), blocks_(std::move(blocks)), alpha_last_(alpha_last) {
  if (m < 1 || n < 1) throw InvalidArgument("enhanced partition box needs m, n >= 1");
  if (alpha0 < 0 || alpha_last < 0) throw InvalidArgument("fixed counts must be non-negative");
  int total = alpha0 + alpha_last;
  for (std::size_t i = 0; i < blocks_.size(); ++i) {
    const Block& b = blocks_[i];
    if (b.mult < 1) throw InvalidArgument("block multiplicity must be positive");
    if (b.value < 0 || b.value > n) throw InvalidArgument("block value outside [0, n]");
    if (i && b.value <= blocks_[i - 1].value) throw InvalidArgument("block values must strictly increase");
    total += b.mult;
  }
  if (total != m) throw InvalidArgument("enhanced partition has " + std::to_string(total) + " entries, expected " +
                                        std::to_string(m));
}

bool operator<(const EnhancedPartition& a, const EnhancedPartition& b) {
  auto key = [](const EnhancedPartition& e) {
    std::vector<std::pair<int, int>> bl;
    for (const auto& x : e.blocks()) bl.emplace_back(x.value, x.mult);
    return std::make_tuple(e.m(), e.n(), e.alpha0(), bl, e.alpha_last());
  };
  return key(a) < key(b);
}

namespace {

std::string power(int value, int mult) {
  std::string s = std::to_string(value);
  if (mult > 1) s += "^" + std::to_string(mult);
  return s;
}

// Comma separated entries "v" or "v^k", possibly empty.
std::vector<Block> parse_entries(const std::string& text, const std::string& whole) {
  std::vector<Block> out;
  std::size_t i = 0;
  auto fail = [&] { throw ParseError("cannot parse partition \"" + whole + "\""); };
  auto number = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::size_t start = i;
    if (i < text.size() && text[i] == '-') ++i;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
    if (start == i || (i == start + 1 && text[start] == '-')) fail();
    const int v = std::stoi(text.substr(start, i - start));
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    return v;
  };
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  for (;;) {
    const int v = number();
    int k = 1;
    if (i < text.size() && text[i] == '^') {
      ++i;
      k = number();
      if (k < 1) fail();
    }
    out.push_back({v, k});
    if (i == text.size()) break;
    if (text[i] != ',') fail();
    ++i;
  }
  return out;
}

std::vector<std::string> split_bars(const std::string& text) {
  std::string s = text;
  auto first = s.find_first_not_of(" \t"), last = s.find_last_not_of(" \t");
  if (first == std::string::npos || s[first] != '(' || s[last] != ')')
    throw ParseError("partition must be enclosed in parentheses: \"" + text + "\"");
  s = s.substr(first + 1, last - first - 1);
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= s.size(); ++i)
    if (i == s.size() || s[i] == '|') {
      parts.push_back(s.substr(start, i - start));
      start = i + 1;
    }
  return parts;
}

int total(const std::vector<Block>& v) {
  int t = 0;
  for (const auto& b : v) t += b.mult;
  return t;
}

// Merges runs of equal values; rejects decreasing input.
std::vector<Block> merge(const std::vector<Block>& v, const std::string& whole) {
  std::vector<Block> out;
  for (const auto& b : v) {
    if (!out.empty() && out.back().value == b.value) {
      out.back().mult += b.mult;
    } else {
      if (!out.empty() && b.value < out.back().value)
        throw ParseError("partition entries must be non-decreasing: \"" + whole + "\"");
      out.push_back(b);
    }
  }
  return out;
}

}  // namespace

PlainPartition parse_plain(const std::string& text, int n) {
  const auto sections = split_bars(text);
  if (sections.size() != 1) throw ParseError("plain partition cannot contain bars: \"" + text + "\"");
  std::vector<int> parts;
  for (const auto& b : parse_entries(sections[0], text))
    for (int k = 0; k < b.mult; ++k) parts.push_back(b.value);
  try {
    return PlainPartition(static_cast<int>(parts.size()), n, parts);
  } catch (const InvalidArgument& e) {
    throw ParseError("\"" + text + "\": " + e.what());
  }
}

std::string EnhancedPartition::to_string() const {
  std::string s = "(";
  if (alpha0_) s += power(0, alpha0_);
  s += "|";
  for (std::size_t i = 0; i < blocks_.size(); ++i) s += (i ? "," : "") + power(blocks_[i].value, blocks_[i].mult);
  s += "|";
  if (alpha_last_) s += power(n_, alpha_last_);
  return s + ")";
}

EnhancedPartition parse_enhanced(const std::string& text, int n) {
  const auto sections = split_bars(text);
  std::vector<Block> zeros, middle, tops;
  if (sections.size() == 3) {
    zeros = parse_entries(sections[0], text);
    middle = parse_entries(sections[1], text);
    tops = parse_entries(sections[2], text);
  } else if (sections.size() == 2) {
    middle = parse_entries(sections[0], text);
    tops = parse_entries(sections[1], text);
  } else {
    throw ParseError("enhanced partition needs one or two bars: \"" + text + "\"");
  }
  for (const auto& b : zeros)
    if (b.value != 0) throw ParseError("only 0s may stand before the first bar: \"" + text + "\"");
  for (const auto& b : tops)
    if (b.value != n) throw ParseError("only " + std::to_string(n) + "s may stand after the second bar: \"" + text + "\"");
  middle = merge(middle, text);
  const int m = total(zeros) + total(middle) + total(tops);
  try {
    return EnhancedPartition(m, n, total(zeros), middle, total(tops));
  } catch (const InvalidArgument& e) {
    throw ParseError("\"" + text + "\": " + e.what());
  }
}

PlainPartition chi(const EnhancedPartition& e) {
  std::vector<int> parts(static_cast<std::size_t>(e.alpha0()), 0);
  for (const auto& b : e.blocks()) parts.insert(parts.end(), static_cast<std::size_t>(b.mult), b.value);
  parts.insert(parts.end(), static_cast<std::size_t>(e.alpha_last()), e.n());
  return PlainPartition(e.m(), e.n(), std::move(parts));
}

bool is_EL(const EnhancedPartition& e) { return e.r() == 0 || e.blocks().front().value != 0; }
bool is_ER(const EnhancedPartition& e) { return e.r() == 0 || e.blocks().back().value != e.n(); }

std::vector<std::size_t> r_alpha(const EnhancedPartition& e) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < e.r(); ++i)
    if (e.blocks()[i].value != 0) out.push_back(i + 1);
  return out;
}

PlainPartition delta(const EnhancedPartition& e, const std::vector<std::size_t>& J) {
  const auto R = r_alpha(e);
  std::vector<int> parts(static_cast<std::size_t>(e.alpha0()), 0);
  for (std::size_t i = 0; i < e.r(); ++i) {
    const Block& b = e.blocks()[i];
    const bool lowered = std::find(J.begin(), J.end(), i + 1) != J.end();
    parts.insert(parts.end(), static_cast<std::size_t>(b.mult), lowered ? b.value - 1 : b.value);
  }
  for (std::size_t j : J)
    if (std::find(R.begin(), R.end(), j) == R.end())
      throw InvalidArgument("delta: index " + std::to_string(j) + " is not in R");
  parts.insert(parts.end(), static_cast<std::size_t>(e.alpha_last()), e.n());
  return PlainPartition(e.m(), e.n(), std::move(parts));
}

EnhancedPartition f(const EnhancedPartition& e) {
  if (!is_EL(e)) throw InvalidArgument("f is defined on E_L only: " + e.to_string());
  const auto& bl = e.blocks();
  if (bl.empty()) return EnhancedPartition(e.m(), e.n(), e.alpha0(), e.alpha_last() ? std::vector<Block>{{0, e.alpha_last()}} : std::vector<Block>{}, 0);
  // Keep the last copy of each value, drop the others to the previous value.
  std::vector<Block> out;
  if (bl[0].mult > 1) out.push_back({0, bl[0].mult - 1});
  for (std::size_t i = 1; i < bl.size(); ++i) out.push_back({bl[i - 1].value, bl[i].mult});
  const int last = bl.back().value;
  const int count = 1 + e.alpha_last();
  if (last == e.n()) return EnhancedPartition(e.m(), e.n(), e.alpha0(), std::move(out), count);
  out.push_back({last, count});
  return EnhancedPartition(e.m(), e.n(), e.alpha0(), std::move(out), 0);
}

EnhancedPartition g(const EnhancedPartition& e) {
  if (!is_ER(e)) throw InvalidArgument("g is defined on E_R only: " + e.to_string());
  const auto& bl = e.blocks();
  // Keep the first copy of each value, raise the others to the next value.
  std::vector<Block> out;
  int carry = 0;
  for (std::size_t i = 0; i < bl.size(); ++i) {
    if (i == 0 && bl[0].value == 0) {
      carry = bl[0].mult;
      continue;
    }
    out.push_back({bl[i].value, 1 + carry});
    carry = bl[i].mult - 1;
  }
  if (e.alpha_last() > 0) {
    out.push_back({e.n(), carry + 1});
    return EnhancedPartition(e.m(), e.n(), e.alpha0(), std::move(out), e.alpha_last() - 1);
  }
  return EnhancedPartition(e.m(), e.n(), e.alpha0(), std::move(out), carry);
}

EnhancedPartition enhance_minus_delta(const EnhancedPartition& e) {
  if (!is_EL(e)) throw InvalidArgument("enhance_minus_delta is defined on E_L only: " + e.to_string());
  const auto& bl = e.blocks();
  std::vector<Block> out;
  if (bl.empty()) {
    // nothing to subtract; the 0s are released so g can raise them
    if (e.alpha0()) out.push_back({0, e.alpha0()});
    return EnhancedPartition(e.m(), e.n(), 0, std::move(out), e.alpha_last());
  }
  int fixed0 = 0;
  std::size_t start = 0;
  if (bl[0].value == 1) {
    fixed0 = e.alpha0() + 1;
    if (bl[0].mult > 1) out.push_back({0, bl[0].mult - 1});
    start = 1;
  } else if (e.alpha0()) {
    out.push_back({0, e.alpha0()});
  }
  for (std::size_t i = start; i < bl.size(); ++i) out.push_back({bl[i].value - 1, bl[i].mult});
  return EnhancedPartition(e.m(), e.n(), fixed0, std::move(out), e.alpha_last());
}

EnhancedPartition f_tilde(const EnhancedPartition& e) {
  if (!is_EL(e)) throw InvalidArgument("f_tilde is defined on E_L only: " + e.to_string());
  const auto& bl = e.blocks();
  const int n = e.n();
  if (bl.empty()) {
    if (e.alpha_last() == 0) return EnhancedPartition(e.m(), n, 0, {}, e.m());
    return EnhancedPartition(e.m(), n, 0, {{n, e.alpha0() + 1}}, e.alpha_last() - 1);
  }
  // First copy of each value drops by one; the rest rise to the next value.
  std::vector<Block> out;
  int fixed0 = 0;
  if (bl[0].value == 1)
    fixed0 = e.alpha0() + 1;
  else
    out.push_back({bl[0].value - 1, e.alpha0() + 1});
  for (std::size_t i = 1; i < bl.size(); ++i) out.push_back({bl[i].value - 1, bl[i - 1].mult});
  const int tail = bl.back().mult;
  if (e.alpha_last() == 0) return EnhancedPartition(e.m(), n, fixed0, std::move(out), tail - 1);
  out.push_back({n, tail});
  return EnhancedPartition(e.m(), n, fixed0, std::move(out), e.alpha_last() - 1);
}

EnhancedPartition default_enhance(const PlainPartition& p) {
  int zeros = 0;
  std::vector<Block> blocks;
  for (int v : p.parts()) {
    if (v == 0) {
      ++zeros;
    } else if (!blocks.empty() && blocks.back().value == v) {
      ++blocks.back().mult;
    } else {
      blocks.push_back({v, 1});
    }
  }
  return EnhancedPartition(p.m(), p.n(), zeros, std::move(blocks), 0);
}

namespace {

void plain_partitions(int m, int n, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (static_cast<int>(cur.size()) == m) {
    out.push_back(cur);
    return;
  }
  for (int v = cur.empty() ? 0 : cur.back(); v <= n; ++v) {
    cur.push_back(v);
    plain_partitions(m, n, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<EnhancedPartition> enumerate_enhanced(int m, int n) {
  if (m < 1 || n < 1) throw InvalidArgument("box needs m, n >= 1");
  std::vector<std::vector<int>> plains;
  std::vector<int> cur;
  plain_partitions(m, n, cur, plains);
  std::vector<EnhancedPartition> out;
  for (const auto& p : plains) {
    const int zeros = static_cast<int>(std::count(p.begin(), p.end(), 0));
    const int tops = static_cast<int>(std::count(p.begin(), p.end(), n));
    for (int a0 = 0; a0 <= zeros; ++a0)
      for (int al = 0; al <= tops; ++al) {
        std::vector<Block> blocks;
        for (std::size_t i = static_cast<std::size_t>(a0); i + static_cast<std::size_t>(al) < p.size(); ++i) {
          if (!blocks.empty() && blocks.back().value == p[i])
            ++blocks.back().mult;
          else
            blocks.push_back({p[i], 1});
        }
        out.emplace_back(m, n, a0, std::move(blocks), al);
      }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EnhancedPartition> enumerate_EL(int m, int n) {
  auto all = enumerate_enhanced(m, n);
  std::erase_if(all, [](const EnhancedPartition& e) { return !is_EL(e); });
  return all;
}

std::vector<EnhancedPartition> enumerate_ER(int m, int n) {
  auto all = enumerate_enhanced(m, n);
  std::erase_if(all, [](const EnhancedPartition& e) { return !is_ER(e); });
  return all;
}

std::vector<ResolutionTerm> resolution_terms(const EnhancedPartition& e, ResolutionKind kind) {
  if (!is_EL(e)) throw InvalidArgument("resolutions are defined on E_L only: " + e.to_string());
  (void)kind;  // both complexes share vertices and degrees
  const auto R = r_alpha(e);
  std::vector<ResolutionTerm> terms;
  for (std::size_t mask = 0; mask < (std::size_t{1} << R.size()); ++mask) {
    std::vector<std::size_t> J;
    for (std::size_t t = 0; t < R.size(); ++t)
      if (mask >> t & 1) J.push_back(R[t]);
    terms.push_back({-static_cast<int>(J.size()), delta(e, J), J});
  }
  std::stable_sort(terms.begin(), terms.end(), [](const ResolutionTerm& a, const ResolutionTerm& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.subset < b.subset;
  });
  return terms;
}

K0Vector euler_class(const std::vector<ResolutionTerm>& terms, ResolutionKind kind, const IdealLattice& lattice) {
  K0Vector out(lattice.size());
  const Poset& p = lattice.lattice();
  for (const auto& t : terms) {
    const Element x = lattice.index_of(t.vertex.parts());
    const int s = t.degree % 2 ? -1 : 1;
    if (kind == ResolutionKind::Projective)
      p.down_set(x).for_each([&](std::size_t b) { out[b] += s; });
    else
      for (Element c = x; c < p.size(); ++c)
        if (p.leq(x, c)) out[c] += s;
  }
  return out;
}

K0Vector interval_class(const IdealLattice& lattice, Element lo, Element hi) {
  K0Vector out(lattice.size());
  for (Element x : interval_elements(lattice.lattice(), lo, hi)) out[x] = 1;
  return out;
}

K0Vector interval_class(const IdealLattice& lattice, const PlainPartition& lo, const PlainPartition& hi) {
  return interval_class(lattice, lattice.index_of(lo.parts()), lattice.index_of(hi.parts()));
}

K0Vector l_class(const IdealLattice& lattice, const EnhancedPartition& e) {
  return interval_class(lattice, chi(f(e)), chi(e));
}

namespace {

// Signed incidence between present subsets of sizes k-1 and k (bitmasks):
// removing the t-th smallest element of J carries sign (-1)^t.
IntMatrix boundary(const std::vector<std::size_t>& smaller, const std::vector<std::size_t>& larger) {
  IntMatrix d(smaller.size(), larger.size());
  for (std::size_t c = 0; c < larger.size(); ++c) {
    const std::size_t J = larger[c];
    int t = 0;
    for (std::size_t bit = 0; bit < 64; ++bit) {
      if (!(J >> bit & 1)) continue;
      const std::size_t face = J & ~(std::size_t{1} << bit);
      auto it = std::lower_bound(smaller.begin(), smaller.end(), face);
      if (it != smaller.end() && *it == face) d(static_cast<std::size_t>(it - smaller.begin()), c) = t % 2 ? -1 : 1;
      ++t;
    }
  }
  return d;
}

bool leq_parts(const std::vector<int>& a, const std::vector<int>& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

}  // namespace

HomologyReport check_resolution_exact(const EnhancedPartition& e, const IdealLattice& lattice, ResolutionKind kind) {
  const auto terms = resolution_terms(e, kind);
  const std::size_t r = r_alpha(e).size();
  HomologyReport report{kind, kind == ResolutionKind::Projective ? 0 : -static_cast<int>(r), {}, {}};

  // term vertices indexed by subset mask
  std::vector<std::vector<int>> vertex(std::size_t{1} << r);
  const auto R = r_alpha(e);
  for (const auto& t : terms) {
    std::size_t mask = 0;
    for (std::size_t j : t.subset) mask |= std::size_t{1} << (std::find(R.begin(), R.end(), j) - R.begin());
    vertex[mask] = t.vertex.parts();
  }

  K0Vector predicted;
  if (kind == ResolutionKind::Projective) {
    predicted = l_class(lattice, e);
  } else {
    const EnhancedPartition low = enhance_minus_delta(e);
    predicted = interval_class(lattice, chi(low), chi(g(low)));
  }

  std::size_t total = 0;
  for (Element beta = 0; beta < lattice.size(); ++beta) {
    const auto& b = lattice.parts(beta);
    std::vector<std::vector<std::size_t>> present(r + 1);
    for (std::size_t mask = 0; mask < vertex.size(); ++mask) {
      const bool in = kind == ResolutionKind::Projective ? leq_parts(b, vertex[mask]) : leq_parts(vertex[mask], b);
      if (in) present[static_cast<std::size_t>(std::popcount(mask))].push_back(mask);
    }
    std::size_t nonzero = 0, extreme = kind == ResolutionKind::Projective ? 0 : r;
    for (std::size_t k = 0; k <= r; ++k)
      if (!present[k].empty()) {
        ++nonzero;
        extreme = kind == ResolutionKind::Projective ? k : std::min(extreme, k);
      }
    if (!nonzero) {
      if (predicted[beta] != 0)
        report.findings.push_back("vertex " + partition_label(b) + " lies in the predicted interval but the complex vanishes");
      continue;
    }
    std::vector<std::size_t> ranks(r + 2, 0);  // ranks[k]: map between sizes k-1 and k
    for (std::size_t k = 1; k <= r; ++k)
      if (!present[k - 1].empty() && !present[k].empty()) ranks[k] = rank(boundary(present[k - 1], present[k]));
    VertexHomology vh{beta, extreme, std::vector<std::size_t>(r + 1, 0)};
    for (std::size_t k = 0; k <= r; ++k) {
      vh.dims[k] = present[k].size() - ranks[k] - ranks[k + 1];
      total += vh.dims[k];
      const bool expected_here = static_cast<int>(k) == -report.expected_degree;
      const std::size_t want = expected_here && predicted[beta] != 0 ? 1 : 0;
      if (vh.dims[k] != want)
        report.findings.push_back("vertex " + partition_label(b) + ": homology " + std::to_string(vh.dims[k]) +
                                  " in degree -" + std::to_string(k) + ", expected " + std::to_string(want));
    }
    report.vertices.push_back(std::move(vh));
  }
  std::size_t interval_size = 0;
  for (const auto& x : predicted) interval_size += x != 0;
  if (total != interval_size)
    report.findings.push_back("total homology " + std::to_string(total) + " differs from interval size " +
                              std::to_string(interval_size));
  return report;
}

}  // namespace coxlab
