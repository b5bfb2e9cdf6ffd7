#include <doctest.h>

#include <random>

#include "coxlab/error.hpp"
#include "coxlab/ideal_lattice.hpp"
#include "coxlab/lattice_operator.hpp"
#include "coxlab/simd/kernels.hpp"
#include "helpers.hpp"

using namespace coxlab;

namespace {

template <class T>
std::vector<T> random_block(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> d(lo, hi);
  std::vector<T> v(n);
  for (auto& x : v) x = static_cast<T>(d(rng));
  return v;
}

std::vector<simd::EdgePair> random_edges(std::mt19937_64& rng, std::size_t rows, std::size_t count) {
  std::uniform_int_distribution<std::uint32_t> d(0, static_cast<std::uint32_t>(rows - 1));
  std::vector<simd::EdgePair> e;
  while (e.size() < count) {
    const auto a = d(rng), b = d(rng);
    if (a != b) e.push_back({a, b});
  }
  return e;
}

template <class T, class Psi>
void compare_psi(Psi pick, long lo, long hi) {
  std::mt19937_64 rng(42);
  const auto& ref = simd::kernels_for(simd::Isa::Scalar);
  for (auto isa : simd::supported()) {
    const auto& k = simd::kernels_for(isa);
    CAPTURE(k.name);
    for (std::size_t width : {64, 128, 256}) {
      const std::size_t rows = 40;
      const auto edges = random_edges(rng, rows, 90);
      auto a = random_block<T>(rng, rows * width, lo, hi);
      auto b = a;
      // wrapping is allowed here: both sides must wrap identically
      const auto ra = pick(ref)(a.data(), width, edges.data(), edges.size());
      const auto rb = pick(k)(b.data(), width, edges.data(), edges.size());
      CHECK(a == b);
      CHECK(ra == rb);
    }
  }
}

}  // namespace

TEST_CASE("scalar is always available") {
  const auto isas = simd::supported();
  REQUIRE_FALSE(isas.empty());
  CHECK(isas.front() == simd::Isa::Scalar);
  CHECK(simd::to_string(simd::Isa::Avx512) == "avx512");
}

TEST_CASE("psi kernels agree with scalar on every lane type") {
  compare_psi<std::int8_t>([](const simd::Kernels& k) { return k.psi8; }, -128, 127);
  compare_psi<std::int8_t>([](const simd::Kernels& k) { return k.psi8; }, -3, 3);
  compare_psi<std::int16_t>([](const simd::Kernels& k) { return k.psi16; }, -32768, 32767);
  compare_psi<std::int64_t>([](const simd::Kernels& k) { return k.psi64; }, -1000000, 1000000);
}

TEST_CASE("magnitude reports the most negative value") {
  for (auto isa : simd::supported()) {
    const auto& k = simd::kernels_for(isa);
    std::vector<std::int8_t> x(2 * 64, 0);
    x[5] = -128;  // row 0
    const simd::EdgePair e{0, 1};
    // row1 -= row0 gives +128 -> wraps to -128, magnitude 0x80
    CHECK(k.psi8(x.data(), 64, &e, 1) == 0x80);
  }
}

TEST_CASE("is_zero kernels") {
  for (auto isa : simd::supported()) {
    const auto& k = simd::kernels_for(isa);
    for (std::size_t n : {0, 1, 63, 64, 65, 300}) {
      std::vector<std::int8_t> a(n, 0);
      std::vector<std::int16_t> b(n, 0);
      std::vector<std::int64_t> c(n, 0);
      CHECK(k.is_zero8(a.data(), n));
      CHECK(k.is_zero16(b.data(), n));
      CHECK(k.is_zero64(c.data(), n));
      if (n == 0) continue;
      a[n - 1] = 1;
      b[n / 2] = -1;
      c[0] = std::int64_t{1} << 62;
      CHECK_FALSE(k.is_zero8(a.data(), n));
      CHECK_FALSE(k.is_zero16(b.data(), n));
      CHECK_FALSE(k.is_zero64(c.data(), n));
    }
  }
}

TEST_CASE("order search is identical across kernel variants") {
  std::mt19937_64 rng(17);
  std::vector<Poset> bases{grid(2, 3), grid(3, 4), grid(1, 300), grid(5, 5)};
  for (int t = 0; t < 10; ++t) bases.push_back(test::random_poset(rng, 6, 0.3));
  for (const auto& b : bases) {
    const IdealLattice lat(b);
    const CoxeterOperator op(lat);
    std::optional<SignedOrder> ref;
    bool ref_throws = false;
    try {
      ref = op.find_signed_order(80, simd::kernels_for(simd::Isa::Scalar));
    } catch (const NotPeriodic&) {
      ref_throws = true;
    }
    for (auto isa : simd::supported()) {
      CAPTURE(simd::to_string(isa));
      if (ref_throws) {
        CHECK_THROWS_AS(op.find_signed_order(80, simd::kernels_for(isa)), NotPeriodic);
      } else {
        CHECK(op.find_signed_order(80, simd::kernels_for(isa)) == *ref);
      }
    }
  }
}

TEST_CASE("block overflow is detected per lane width") {
  // a non-periodic operator grows until every narrow tier overflows
  const IdealLattice lat(Poset::from_covers({"a", "b", "c", "d", "e"}, {{0, 1}, {0, 2}, {1, 3}, {3, 4}}));
  REQUIRE_THROWS_AS(find_signed_order(coxeter_matrix(lat.lattice()), 200), NotPeriodic);
  const CoxeterOperator op(lat);
  for (auto isa : simd::supported()) {
    const auto& k = simd::kernels_for(isa);
    std::vector<std::int8_t> x(lat.size() * 64, 0);
    for (std::size_t j = 0; j < lat.size(); ++j) x[j * 64 + j] = 1;
    bool overflowed = false;
    for (int step = 0; step < 2000 && !overflowed; ++step) {
      try {
        op.apply_psi_block(x.data(), 64, k);
      } catch (const Overflow&) {
        overflowed = true;
      }
    }
    CHECK(overflowed);
  }
}

TEST_CASE("vector kernels reject unpadded widths") {
  const IdealLattice lat(grid(2, 2));
  const CoxeterOperator op(lat);
  for (auto isa : simd::supported()) {
    if (isa == simd::Isa::Scalar) continue;
    std::vector<std::int64_t> x(lat.size() * 10, 0);
    CHECK_THROWS_AS(op.apply_psi_block(x.data(), 10, simd::kernels_for(isa)), InvalidArgument);
  }
}
