#include "coxlab/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

#include "coxlab/error.hpp"

namespace coxlab {

namespace {

std::string root_label(const std::vector<int>& c) {
  std::string s;
  for (int x : c) s += std::to_string(x);
  return s;
}

void link(std::vector<std::vector<int>>& c, int i, int j) {  // 1-based, simply laced edge
  c[i - 1][j - 1] = c[j - 1][i - 1] = -1;
}

}  // namespace

std::vector<std::vector<int>> cartan_matrix(char type, int rank) {
  const bool ok = (type == 'A' && rank >= 1) || ((type == 'B' || type == 'C') && rank >= 2) ||
                  (type == 'D' && rank >= 4) || (type == 'E' && (rank == 6 || rank == 7));
  if (!ok) throw InvalidArgument(std::string("unsupported root system ") + type + std::to_string(rank));
  const int n = rank;
  std::vector<std::vector<int>> c(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) c[i][i] = 2;
  switch (type) {
    case 'A':
    case 'B':
    case 'C':
      for (int i = 1; i < n; ++i) link(c, i, i + 1);
      if (type == 'B') c[n - 2][n - 1] = -2;  // alpha_n short
      if (type == 'C') c[n - 1][n - 2] = -2;  // alpha_n long
      break;
    case 'D':
      for (int i = 1; i < n - 1; ++i) link(c, i, i + 1);
      link(c, n - 2, n);
      break;
    case 'E':
      link(c, 1, 3);
      link(c, 3, 4);
      link(c, 2, 4);
      for (int i = 4; i < n; ++i) link(c, i, i + 1);
      break;
  }
  return c;
}

RootSystem build_root_system(char type, int rank) {
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.cartan = cartan_matrix(type, rank);
  const int n = rank;

  std::set<std::vector<int>> known;
  std::vector<std::vector<int>> layer;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    layer.push_back(e);
    known.insert(e);
  }
  // Height induction: beta + alpha_i is a root iff p - <beta, alpha_i^vee> > 0,
  // p the length of the alpha_i-string below beta.
  while (!layer.empty()) {
    std::set<std::vector<int>> next;
    for (const auto& beta : layer)
      for (int i = 0; i < n; ++i) {
        int p = 0;
        for (auto down = beta; down[i] > 0;) {
          --down[i];
          if (!known.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (int j = 0; j < n; ++j) pairing += beta[j] * rs.cartan[j][i];
        if (p - pairing > 0) {
          auto up = beta;
          ++up[i];
          next.insert(up);
        }
      }
    layer.assign(next.begin(), next.end());
    known.insert(next.begin(), next.end());
  }
  rs.positive.assign(known.begin(), known.end());
  auto height = [](const std::vector<int>& v) { return std::accumulate(v.begin(), v.end(), 0); };
  std::stable_sort(rs.positive.begin(), rs.positive.end(),
                   [&](const auto& a, const auto& b) { return height(a) < height(b); });
  for (const auto& r : rs.positive) rs.heights.push_back(height(r));
  const int top = rs.heights.back();
  if (std::count(rs.heights.begin(), rs.heights.end(), top) != 1)
    throw Error("root system has no unique highest root");
  return rs;
}

int coxeter_number(const RootSystem& rs) { return rs.heights.back() + 1; }

std::vector<int> cominuscule_roots(const RootSystem& rs) {
  std::vector<int> out;
  const auto& eta = rs.highest_root();
  for (int i = 0; i < rs.rank; ++i)
    if (eta[i] == 1) out.push_back(i + 1);
  return out;
}

Poset root_poset(const RootSystem& rs) {
  std::map<std::vector<int>, Element> index;
  std::vector<std::string> labels;
  for (const auto& r : rs.positive) {
    index.emplace(r, labels.size());
    labels.push_back(root_label(r));
  }
  std::vector<std::pair<Element, Element>> covers;
  for (const auto& r : rs.positive)
    for (int i = 0; i < rs.rank; ++i) {
      auto up = r;
      ++up[i];
      if (auto it = index.find(up); it != index.end()) covers.emplace_back(index.at(r), it->second);
    }
  return Poset::from_covers(std::move(labels), covers);
}

std::string to_string(ShapeTag tag) {
  switch (tag) {
    case ShapeTag::I:
      return "I";
    case ShapeTag::II:
      return "II";
    case ShapeTag::III:
      return "III";
    case ShapeTag::E6:
      return "E6";
    case ShapeTag::E7:
      return "E7";
  }
  return "?";
}

Poset shifted_staircase(int k) {
  if (k < 1) throw InvalidArgument("staircase needs k >= 1");
  std::vector<std::string> labels;
  std::map<std::pair<int, int>, Element> at;
  for (int i = 1; i <= k; ++i)
    for (int j = i; j <= k; ++j) {
      at[{i, j}] = labels.size();
      labels.push_back("(" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
  std::vector<std::pair<Element, Element>> covers;
  for (const auto& [ij, x] : at) {
    auto [i, j] = ij;
    if (auto it = at.find({i + 1, j}); it != at.end()) covers.emplace_back(x, it->second);
    if (auto it = at.find({i, j + 1}); it != at.end()) covers.emplace_back(x, it->second);
  }
  return Poset::from_covers(std::move(labels), covers);
}

Poset fork_poset(int k) {
  if (k < 0) throw InvalidArgument("fork needs k >= 0");
  // 0..k-1 lower chain, k and k+1 the prongs, then the upper chain
  const std::size_t size = 2 * static_cast<std::size_t>(k) + 2;
  std::vector<std::string> labels;
  for (std::size_t i = 1; i <= size; ++i) labels.push_back(std::to_string(i));
  std::vector<std::pair<Element, Element>> covers;
  const Element a = static_cast<Element>(k), b = a + 1;
  for (Element i = 0; i + 1 < a; ++i) covers.emplace_back(i, i + 1);
  if (k > 0) {
    covers.emplace_back(a - 1, a);
    covers.emplace_back(a - 1, b);
  }
  if (k > 0) {
    covers.emplace_back(a, b + 1);
    covers.emplace_back(b, b + 1);
    for (Element i = b + 1; i + 1 < size; ++i) covers.emplace_back(i, i + 1);
  }
  return Poset::from_covers(std::move(labels), covers);
}

Poset d_tree_poset(int k) {
  if (k < 3) throw InvalidArgument("D tree needs k >= 3");
  std::vector<std::string> labels;
  for (int i = 1; i <= k; ++i) labels.push_back(std::to_string(i));
  std::vector<std::pair<Element, Element>> covers;
  for (Element i = 0; i + 1 < static_cast<Element>(k - 2); ++i) covers.emplace_back(i, i + 1);
  covers.emplace_back(static_cast<Element>(k - 3), static_cast<Element>(k - 2));
  covers.emplace_back(static_cast<Element>(k - 3), static_cast<Element>(k - 1));
  return Poset::from_covers(std::move(labels), covers);
}

CominusculeData cominuscule_poset(const RootSystem& rs, int i) {
  if (i < 1 || i > rs.rank) throw InvalidArgument("simple root index out of range");
  const int coeff = rs.highest_root()[static_cast<std::size_t>(i - 1)];
  if (coeff != 1)
    throw InvalidArgument("sigma_" + std::to_string(i) + " is not cominuscule: its coefficient in the highest root is " +
                          std::to_string(coeff));
  const Poset rp = root_poset(rs);
  std::vector<int> simple(static_cast<std::size_t>(rs.rank), 0);
  simple[static_cast<std::size_t>(i - 1)] = 1;
  const Element lo = *rp.find_label(root_label(simple));
  const Element hi = *rp.find_label(root_label(rs.highest_root()));
  Poset c = induced(rp, interval_elements(rp, lo, hi));

  // Small cases are ambiguous up to isomorphism (the 6-element staircase
  // is also the 6-element fork), so the tag comes from (type, root) and
  // the poset is then checked against that reference shape.
  const int n = rs.rank;
  ShapeTag shape = ShapeTag::I;
  std::optional<Poset> reference;
  switch (rs.type) {
    case 'A':
      reference = grid(i, n + 1 - i);
      break;
    case 'B':
      reference = grid(1, 2 * n - 1);
      break;
    case 'C':
      shape = ShapeTag::II;
      reference = shifted_staircase(n);
      break;
    case 'D':
      shape = i == 1 ? ShapeTag::III : ShapeTag::II;
      reference = i == 1 ? fork_poset(n - 2) : shifted_staircase(n - 1);
      break;
    default:
      shape = n == 6 ? ShapeTag::E6 : ShapeTag::E7;
  }
  if (reference && !isomorphic(c, *reference))
    throw Error("cominuscule poset of " + std::string(1, rs.type) + std::to_string(n) + " root " + std::to_string(i) +
                " does not match its reference shape " + to_string(shape));
  return {i, std::move(c), shape};
}

}  // namespace coxlab
