#include <algorithm>
#include <array>
#include <vector>

#include "coxlab/poset.hpp"

namespace coxlab {

namespace {

using Signature = std::array<std::size_t, 5>;

std::vector<Signature> signatures(const Poset& p) {
  const auto r = ranks(p);
  std::vector<std::size_t> up_size(p.size(), 0);
  for (Element x = 0; x < p.size(); ++x)
    p.down_set(x).for_each([&](std::size_t y) { ++up_size[y]; });
  std::vector<Signature> sig(p.size());
  for (Element x = 0; x < p.size(); ++x)
    sig[x] = {static_cast<std::size_t>(r[x]), p.lower_covers(x).size(), p.upper_covers(x).size(),
              p.down_set(x).count(), up_size[x]};
  return sig;
}

struct Matcher {
  const Poset& p;
  const Poset& q;
  const std::vector<Signature>& sp;
  const std::vector<Signature>& sq;
  std::vector<Element> image;
  std::vector<bool> used;

  bool extend(Element x) {
    if (x == p.size()) return true;
    for (Element y = 0; y < q.size(); ++y) {
      if (used[y] || sp[x] != sq[y]) continue;
      bool ok = true;
      for (Element a = 0; a < x && ok; ++a)
        ok = p.leq(a, x) == q.leq(image[a], y) && p.leq(x, a) == q.leq(y, image[a]);
      if (!ok) continue;
      used[y] = true;
      image[x] = y;
      if (extend(x + 1)) return true;
      used[y] = false;
    }
    return false;
  }
};

}  // namespace

bool isomorphic(const Poset& p, const Poset& q) {
  if (p.size() != q.size() || p.cover_count() != q.cover_count()) return false;
  const auto sp = signatures(p);
  const auto sq = signatures(q);
  auto a = sp, b = sq;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  if (a != b) return false;
  Matcher m{p, q, sp, sq, std::vector<Element>(p.size()), std::vector<bool>(q.size(), false)};
  return m.extend(0);
}

}  // namespace coxlab
