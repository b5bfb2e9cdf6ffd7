#include <doctest.h>

#include <functional>
#include <random>

#include "coxlab/error.hpp"
#include "coxlab/ideal_lattice.hpp"
#include "coxlab/poset.hpp"
#include "helpers.hpp"

using namespace coxlab;

namespace {

// Independent counter: split on the last live element x. Ideals without x
// also miss everything above x; ideals with x contain its whole down-set.
std::size_t count_downsets(const Poset& p) {
  std::function<std::size_t(std::vector<bool>)> go = [&](std::vector<bool> alive) -> std::size_t {
    Element x = p.size();
    for (Element i = p.size(); i-- > 0;)
      if (alive[i]) {
        x = i;
        break;
      }
    if (x == p.size()) return 1;
    // without x: drop x and everything above it
    auto without = alive;
    for (Element y = 0; y < p.size(); ++y)
      if (p.leq(x, y)) without[y] = false;
    // with x: its whole down-set is in, drop those from consideration
    auto with = alive;
    for (Element y = 0; y < p.size(); ++y)
      if (p.leq(y, x)) with[y] = false;
    return go(without) + go(with);
  };
  return go(std::vector<bool>(p.size(), true));
}

std::size_t binomial(int n, int k) {
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace

TEST_CASE("chains") {
  CHECK(chain(1).size() == 1);
  CHECK(chain(1).cover_count() == 0);
  CHECK(chain(2).cover_count() == 1);
  const Poset c = chain(5);
  CHECK(c.cover_count() == 4);
  for (Element i = 0; i < 5; ++i)
    for (Element j = 0; j < 5; ++j) CHECK(c.leq(i, j) == (i <= j));
  CHECK_THROWS_AS(chain(0), InvalidArgument);
}

TEST_CASE("products and grids") {
  const Poset p = product(chain(2), chain(3));
  CHECK(p.size() == 6);
  CHECK(isomorphic(p, grid(2, 3)));
  CHECK(isomorphic(product(chain(1), grid(2, 2)), grid(2, 2)));
  const Poset d = product(chain(2), chain(2));
  CHECK(d.size() == 4);
  CHECK(d.cover_count() == 4);
  CHECK(grid(1, 1).size() == 1);
  CHECK(isomorphic(grid(1, 7), chain(7)));
  CHECK_THROWS_AS(grid(0, 3), InvalidArgument);
  CHECK(grid(2, 3).label(0) == "(1,1)");
}

TEST_CASE("indices follow a linear extension") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 50; ++t) {
    const Poset p = test::random_poset(rng, 9, 0.3);
    for (Element a = 0; a < p.size(); ++a)
      for (Element b = 0; b < p.size(); ++b)
        if (p.leq(a, b)) CHECK(a <= b);
  }
}

TEST_CASE("covers are the transitive reduction of leq") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 50; ++t) {
    const Poset p = test::random_poset(rng, 8, 0.35);
    const std::size_t n = p.size();
    // order axioms by triple loop
    for (Element a = 0; a < n; ++a) {
      CHECK(p.leq(a, a));
      for (Element b = 0; b < n; ++b) {
        if (a != b && p.leq(a, b)) CHECK_FALSE(p.leq(b, a));
        for (Element c = 0; c < n; ++c)
          if (p.leq(a, b) && p.leq(b, c)) CHECK(p.leq(a, c));
      }
    }
    // a cover is a strict relation with nothing strictly between
    std::vector<std::pair<Element, Element>> expect;
    for (Element b = 0; b < n; ++b)
      for (Element a = 0; a < n; ++a) {
        if (!p.lt(a, b)) continue;
        bool gap = false;
        for (Element c = 0; c < n && !gap; ++c) gap = p.lt(a, c) && p.lt(c, b);
        if (!gap) expect.emplace_back(a, b);
      }
    CHECK(p.covers() == expect);
    // closing the covers again gives back leq
    const Poset q = Poset::from_covers(p.labels(), p.covers());
    for (Element a = 0; a < n; ++a)
      for (Element b = 0; b < n; ++b) CHECK(q.leq(a, b) == p.leq(a, b));
  }
}

TEST_CASE("from_relation validates the axioms") {
  std::vector<std::vector<bool>> cyc{{true, true}, {true, true}};
  CHECK_THROWS_AS(Poset::from_relation({"a", "b"}, cyc), InvalidArgument);
  std::vector<std::vector<bool>> ok{{true, true}, {false, true}};
  CHECK(Poset::from_relation({"a", "b"}, ok).cover_count() == 1);
  CHECK_THROWS_AS(Poset::from_covers({}, {}), InvalidArgument);
}

TEST_CASE("ideal lattice sizes match an independent counter") {
  CHECK(IdealLattice(grid(2, 3)).size() == 10);
  for (std::size_t k = 1; k <= 8; ++k) CHECK(IdealLattice(chain(k)).size() == k + 1);
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; m + n <= 12; ++n) {
      CAPTURE(m);
      CAPTURE(n);
      const std::size_t expect = binomial(m + n, m);
      CHECK(IdealLattice(grid(m, n)).size() == expect);
      if (m + n <= 9) CHECK(count_downsets(grid(m, n)) == expect);
    }
  CHECK(IdealLattice(grid(5, 7)).size() == 792);
  std::mt19937_64 rng(3);
  for (int t = 0; t < 40; ++t) {
    const Poset p = test::random_poset(rng, 9, 0.25);
    CHECK(IdealLattice(p).size() == count_downsets(p));
  }
}

TEST_CASE("ideals are down-closed and ordered by containment") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 20; ++t) {
    const IdealLattice lat(test::random_poset(rng, 7, 0.3));
    const Poset& base = lat.base();
    const Poset& L = lat.lattice();
    for (Element x = 0; x < lat.size(); ++x) {
      lat.ideal(x).for_each([&](std::size_t e) {
        for (Element y = 0; y < base.size(); ++y)
          if (base.leq(y, e)) CHECK(lat.ideal(x).test(y));
      });
      for (Element y = 0; y < lat.size(); ++y) CHECK(L.leq(x, y) == lat.ideal(x).is_subset_of(lat.ideal(y)));
    }
  }
}

TEST_CASE("grid lattice labels and canonical order") {
  const IdealLattice lat(grid(2, 3));
  CHECK(lat.is_grid());
  CHECK(lat.lattice().label(0) == "(0,0)");
  CHECK(lat.lattice().label(lat.top()) == "(3,3)");
  for (Element x = 1; x < lat.size(); ++x) CHECK(lat.parts(x - 1) < lat.parts(x));
  CHECK(lat.index_of({1, 2}) == *lat.lattice().find_label("(1,2)"));
  CHECK_FALSE(lat.find({2, 1}).has_value());
  CHECK_THROWS_AS(lat.index_of({0, 4}), LookupError);
}

TEST_CASE("ideal enumeration cap") {
  CHECK_THROWS_AS(IdealLattice(grid(5, 7), 100), ResourceLimit);
}

TEST_CASE("intervals") {
  const IdealLattice lat(grid(2, 3));
  const Poset& L = lat.lattice();
  const Element lo = lat.index_of({0, 1}), hi = lat.index_of({1, 2});
  const auto iv = interval_elements(L, lo, hi);
  std::vector<std::string> got;
  for (Element x : iv) got.push_back(L.label(x));
  CHECK(got == std::vector<std::string>{"(0,1)", "(0,2)", "(1,1)", "(1,2)"});
  CHECK(interval_elements(L, lo, lo) == std::vector<Element>{lo});
  CHECK(interval_elements(L, lat.bottom(), lat.top()).size() == 10);
  CHECK_THROWS_AS(interval_elements(L, hi, lo), InvalidArgument);
}

TEST_CASE("ideal lattices are lattices") {
  std::mt19937_64 rng(9);
  std::vector<Poset> bases{grid(2, 3), grid(3, 3), chain(4)};
  for (int t = 0; t < 10; ++t) bases.push_back(test::random_poset(rng, 6, 0.3));
  for (const auto& b : bases) {
    const IdealLattice lat(b);
    const Poset& L = lat.lattice();
    for (Element x = 0; x < L.size(); ++x)
      for (Element y = 0; y < L.size(); ++y) {
        const auto j = join(L, x, y);
        const auto m = meet(L, x, y);
        REQUIRE(j.has_value());
        REQUIRE(m.has_value());
        Bitset u = lat.ideal(x);
        u |= lat.ideal(y);
        CHECK(lat.ideal(*j) == u);
      }
  }
}

TEST_CASE("add_max and add_min") {
  CHECK(isomorphic(add_max(chain(3)), chain(4)));
  CHECK(isomorphic(add_min(chain(3)), chain(4)));
  const Poset p = grid(2, 2);
  CHECK(add_min(add_max(p)).size() == p.size() + 2);
  const Poset q = add_max(p);
  CHECK(q.maximal_elements().size() == 1);
  for (Element x = 0; x < q.size(); ++x) CHECK(q.leq(x, q.maximal_elements()[0]));
  const Poset r = add_min(antichain(3));
  CHECK(r.minimal_elements().size() == 1);
}

TEST_CASE("dot output") {
  const std::string two = to_dot(chain(2), "C");
  CHECK(two == "digraph C {\nv0 [label=\"1\"];\nv1 [label=\"2\"];\nv1 -> v0;\n}\n");
  const std::string d = to_dot(grid(2, 2));
  std::size_t nodes = 0, edges = 0;
  for (std::size_t i = 0; (i = d.find("[label=", i)) != std::string::npos; ++i) ++nodes;
  for (std::size_t i = 0; (i = d.find(" -> ", i)) != std::string::npos; ++i) ++edges;
  CHECK(nodes == 4);
  CHECK(edges == 4);
  CHECK(to_dot(grid(2, 2)) == d);
}
