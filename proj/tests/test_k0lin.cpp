#include <doctest.h>

#include <random>

#include "coxlab/error.hpp"
#include "coxlab/ideal_lattice.hpp"
#include "coxlab/k0lin.hpp"
#include "coxlab/lattice_operator.hpp"
#include "helpers.hpp"

using namespace coxlab;

namespace {

// mu(a, a) = 1, mu(a, b) = -sum_{a <= c < b} mu(a, c)
IntMatrix mobius_recursion(const Poset& p) {
  const std::size_t n = p.size();
  IntMatrix mu(n, n);
  for (Element a = 0; a < n; ++a)
    for (Element b = a; b < n; ++b) {
      if (!p.leq(a, b)) continue;
      if (a == b) {
        mu(a, b) = 1;
        continue;
      }
      Integer s = 0;
      for (Element c = a; c < b; ++c)
        if (p.leq(a, c) && p.leq(c, b)) s += mu(a, c);
      mu(a, b) = -s;
    }
  return mu;
}

}  // namespace

TEST_CASE("zeta and Mobius") {
  std::mt19937_64 rng(4);
  std::vector<Poset> ps{grid(2, 3), chain(5), antichain(3)};
  for (int t = 0; t < 30; ++t) ps.push_back(test::random_poset(rng, 7, 0.3));
  for (const auto& p : ps) {
    const auto z = zeta_matrix(p);
    const auto mu = mobius_matrix(p);
    CHECK(z * mu == IntMatrix::identity(p.size()));
    CHECK(mu == mobius_recursion(p));
    for (Element a = 0; a < p.size(); ++a) {
      CHECK(z.column(a) == projective_class(p, a));
      CHECK(z.transpose().column(a) == injective_class(p, a));
    }
  }
}

TEST_CASE("Coxeter matrix sends projectives to minus injectives") {
  std::mt19937_64 rng(6);
  for (int t = 0; t < 30; ++t) {
    const Poset p = test::random_poset(rng, 7, 0.3);
    const auto phi = coxeter_matrix(p);
    for (Element a = 0; a < p.size(); ++a) {
      auto inj = injective_class(p, a);
      for (auto& x : inj) x = -x;
      CHECK(phi.apply(projective_class(p, a)) == inj);
    }
  }
}

TEST_CASE("golden convention on J(P_{2,3})") {
  const IdealLattice lat(grid(2, 3));
  const auto phi = coxeter_matrix(lat.lattice());
  const Element from = lat.index_of({1, 2}), to = lat.index_of({0, 1});
  K0Vector e(lat.size()), want(lat.size());
  e[from] = 1;
  want[to] = -1;
  CHECK(phi.apply(e) == want);
  CHECK(CoxeterOperator(lat).apply(e) == want);
}

TEST_CASE("signed order of small matrices") {
  CHECK(find_signed_order(IntMatrix::identity(3)) == SignedOrder{1, 1, 1});
  CHECK(find_signed_order(-IntMatrix::identity(3)) == SignedOrder{1, -1, 2});
  IntMatrix rot{{0, -1}, {1, 0}};  // Phi^2 = -I
  CHECK(find_signed_order(rot) == SignedOrder{2, -1, 4});
  IntMatrix shear{{1, 1}, {0, 1}};
  CHECK_THROWS_AS(find_signed_order(shear, 50), NotPeriodic);
  // grid 1x1: the 2x2 Coxeter matrix has order 3
  CHECK(find_signed_order(coxeter_matrix(IdealLattice(grid(1, 1)).lattice())).exact_order == 3);
  // huge entries force the big-integer path
  IntMatrix grow{{2, 1}, {1, 1}};
  CHECK_THROWS_AS(find_signed_order(grow, 200), NotPeriodic);
}

TEST_CASE("unimodularity and palindromes") {
  CHECK(is_unimodular(IntMatrix{{2, 1}, {1, 1}}));
  CHECK_FALSE(is_unimodular(IntMatrix{{2, 0}, {0, 1}}));
  CHECK(is_palindromic_up_to_sign({1, 3, 3, 1}));
  CHECK(is_palindromic_up_to_sign({1, 0, -1}));
  CHECK_FALSE(is_palindromic_up_to_sign({1, 2, 3}));
}

TEST_CASE("fast operator equals the dense matrix") {
  std::mt19937_64 rng(8);
  std::vector<Poset> bases{grid(2, 3), grid(3, 3), grid(1, 6), chain(3)};
  for (int t = 0; t < 20; ++t) bases.push_back(test::random_poset(rng, 6, 0.3));
  for (const auto& b : bases) {
    const IdealLattice lat(b);
    const CoxeterOperator op(lat);
    CHECK(op.dense() == coxeter_matrix(lat.lattice()));
  }
}

TEST_CASE("blocked order search equals the dense search") {
  std::mt19937_64 rng(10);
  for (int m = 1; m <= 4; ++m)
    for (int n = 1; n <= 4; ++n) {
      const IdealLattice lat(grid(m, n));
      CHECK(CoxeterOperator(lat).find_signed_order() == find_signed_order(coxeter_matrix(lat.lattice())));
    }
  // random bases: periodic or not, both paths must agree
  for (int t = 0; t < 40; ++t) {
    const IdealLattice lat(test::random_poset(rng, 5, 0.35));
    const CoxeterOperator op(lat);
    const auto dense = coxeter_matrix(lat.lattice());
    const std::size_t bound = 60;
    std::optional<SignedOrder> a, b;
    bool ta = false, tb = false;
    try {
      a = op.find_signed_order(bound);
    } catch (const NotPeriodic&) {
      ta = true;
    }
    try {
      b = find_signed_order(dense, bound);
    } catch (const NotPeriodic&) {
      tb = true;
    }
    CHECK(ta == tb);
    CHECK(a == b);
  }
}

TEST_CASE("lattices wider than one block") {
  // 300 > 256 columns: several blocks, and the one-block span certificate
  const IdealLattice chain_lat(grid(1, 299));
  CHECK(CoxeterOperator(chain_lat).find_signed_order() == SignedOrder{301, 1, 301});
  const IdealLattice tall(grid(299, 1));
  CHECK(CoxeterOperator(tall).find_signed_order() == SignedOrder{301, 1, 301});
  const IdealLattice g(grid(4, 6));  // 210 elements, k = 11, both even
  CHECK(CoxeterOperator(g).find_signed_order() == SignedOrder{11, -1, 22});
  const IdealLattice g2(grid(3, 8));  // 165
  CHECK(CoxeterOperator(g2).find_signed_order() == find_signed_order(coxeter_matrix(g2.lattice())));
}
