#include "coxlab/lattice_operator.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>

#include "coxlab/error.hpp"
#include "coxlab/parallel.hpp"

namespace coxlab {

namespace {

// Entries stay below T with 2T inside the lane, so no single update wraps.
constexpr std::uint64_t kMask8 = ~((std::uint64_t{1} << 6) - 1);
constexpr std::uint64_t kMask16 = ~((std::uint64_t{1} << 14) - 1);
constexpr std::uint64_t kMask64 = ~((std::uint64_t{1} << 61) - 1);

constexpr std::size_t kWidthNarrow = 256;
constexpr std::size_t kWidth64 = 64;

void check_width(std::size_t width, const simd::Kernels& k) {
  if (k.isa != simd::Isa::Scalar && width % simd::kWidthQuantum != 0)
    throw InvalidArgument("vector kernels need a block width that is a multiple of " + std::to_string(simd::kWidthQuantum));
}

std::size_t padded(std::size_t w, const simd::Kernels& k) {
  if (k.isa == simd::Isa::Scalar) return w;
  return (w + simd::kWidthQuantum - 1) / simd::kWidthQuantum * simd::kWidthQuantum;
}

}  // namespace

CoxeterOperator::CoxeterOperator(const IdealLattice& lattice) : n_(lattice.size()) {
  if (n_ > std::numeric_limits<std::uint32_t>::max()) throw ResourceLimit("lattice too large for the operator", n_);
  for (const auto& group : lattice.edges_by_base_element())
    for (const auto& e : group)
      edges_.push_back({static_cast<std::uint32_t>(e.upper), static_cast<std::uint32_t>(e.lower)});
}

K0Vector CoxeterOperator::apply(std::span<const Integer> v) const {
  if (v.size() != n_) throw InvalidArgument("vector length does not match lattice size");
  K0Vector x(v.begin(), v.end());
  for (const auto& e : edges_) x[e.lower] -= x[e.upper];
  for (const auto& e : edges_) x[e.upper] += x[e.lower];
  for (auto& c : x) c = -c;
  return x;
}

IntMatrix CoxeterOperator::dense() const {
  IntMatrix phi(n_, n_);
  K0Vector unit(n_);
  for (std::size_t a = 0; a < n_; ++a) {
    unit[a] = 1;
    const auto col = apply(unit);
    unit[a] = 0;
    phi.set_column(a, col);
  }
  return phi;
}

void CoxeterOperator::apply_psi_block(std::int8_t* block, std::size_t width, const simd::Kernels& k) const {
  check_width(width, k);
  if (k.psi8(block, width, edges_.data(), edges_.size()) & kMask8) throw Overflow("operator entries left 6 bits");
}

void CoxeterOperator::apply_psi_block(std::int16_t* block, std::size_t width, const simd::Kernels& k) const {
  check_width(width, k);
  if (k.psi16(block, width, edges_.data(), edges_.size()) & kMask16) throw Overflow("operator entries left 14 bits");
}

void CoxeterOperator::apply_psi_block(std::int64_t* block, std::size_t width, const simd::Kernels& k) const {
  check_width(width, k);
  if (k.psi64(block, width, edges_.data(), edges_.size()) & kMask64) throw Overflow("operator entries left 61 bits");
}

SignedOrder CoxeterOperator::find_signed_order(std::size_t k_max) const {
  return find_signed_order(k_max, simd::active());
}

namespace {

struct BlockResult {
  std::size_t k;
  int sign;     // of Phi^k
  bool spans;  // the iterates of this block span Q^N
};

// Incremental rank of the iterated columns over GF(2). Full rank mod 2
// means an odd determinant, hence a basis over Q.
class SpanTracker {
 public:
  SpanTracker(std::size_t n, bool enabled)
      : n_(n), words_((n + 63) / 64), basis_(enabled ? n : 0), enabled_(enabled) {}

  bool done() const { return enabled_ && rank_ == n_; }

  template <class T>
  void add(const T* x, std::size_t w, std::size_t stride) {
    if (!enabled_ || done() || stale_ > kPatience) return;
    const std::size_t before = rank_;
    std::vector<std::uint64_t> cols(w * words_, 0);
    for (std::size_t r = 0; r < n_; ++r)
      for (std::size_t j = 0; j < w; ++j)
        cols[j * words_ + r / 64] |= static_cast<std::uint64_t>(x[r * stride + j] & 1) << (r % 64);
    for (std::size_t j = 0; j < w && !done(); ++j) insert(cols.data() + j * words_);
    stale_ = rank_ == before ? stale_ + 1 : 0;
  }

 private:
  void insert(std::uint64_t* v) {
    for (std::size_t wd = 0; wd < words_; ++wd)
      while (v[wd]) {
        const std::size_t p = wd * 64 + static_cast<std::size_t>(__builtin_ctzll(v[wd]));
        auto& row = basis_[p];
        if (row.empty()) {
          row.assign(v, v + words_);
          ++rank_;
          return;
        }
        for (std::size_t i = wd; i < words_; ++i) v[i] ^= row[i];
      }
  }

  static constexpr int kPatience = 8;  // steps without rank growth before giving up
  std::size_t n_, words_;
  std::vector<std::vector<std::uint64_t>> basis_;  // by lowest set bit
  std::size_t rank_ = 0;
  int stale_ = 0;
  bool enabled_;
};

// Smallest k <= k_max with Psi^k = +-I on the given identity columns; lane
// j of the block carries column cols[j].
template <class T, class Apply, class IsZero>
BlockResult block_order(std::size_t n, const std::vector<std::size_t>& cols, std::size_t stride, std::size_t k_max,
                        bool track, Apply apply, IsZero is_zero) {
  const std::size_t w = cols.size();
  std::vector<T> x(n * stride, 0);
  for (std::size_t j = 0; j < w; ++j) x[cols[j] * stride + j] = 1;
  SpanTracker span(n, track);
  span.add(x.data(), w, stride);
  for (std::size_t k = 1; k <= k_max; ++k) {
    apply(x.data());
    const T s = x[cols[0] * stride];
    bool diagonal = s == 1 || s == -1;
    for (std::size_t j = 0; j < w && diagonal; ++j) diagonal = x[cols[j] * stride + j] == s;
    if (diagonal) {
      for (std::size_t j = 0; j < w; ++j) x[cols[j] * stride + j] = 0;
      const bool hit = is_zero(x.data(), x.size());
      for (std::size_t j = 0; j < w; ++j) x[cols[j] * stride + j] = s;
      // Phi^k = (-1)^k Psi^k
      if (hit) return {k, static_cast<int>(k % 2 ? -s : s), span.done()};
    }
    span.add(x.data(), w, stride);
  }
  throw NotPeriodic(k_max);
}

}  // namespace

SignedOrder CoxeterOperator::find_signed_order(std::size_t k_max, const simd::Kernels& kernels) const {
  // Block b holds columns b, b + B, b + 2B, ... so that its Psi-orbit
  // spreads over the whole index range quickly. Narrow lanes first: int8,
  // then int16 on the same columns, then int64 in pieces of 64.
  const std::size_t blocks = (n_ + kWidthNarrow - 1) / kWidthNarrow;
  auto run = [&](std::size_t b, bool track) {
    std::vector<std::size_t> cols;
    for (std::size_t c = b; c < n_; c += blocks) cols.push_back(c);
    const std::size_t stride = padded(cols.size(), kernels);
    try {
      return std::vector{block_order<std::int8_t>(
          n_, cols, stride, k_max, track, [&](std::int8_t* x) { apply_psi_block(x, stride, kernels); },
          kernels.is_zero8)};
    } catch (const Overflow&) {
    }
    try {
      return std::vector{block_order<std::int16_t>(
          n_, cols, stride, k_max, track, [&](std::int16_t* x) { apply_psi_block(x, stride, kernels); },
          kernels.is_zero16)};
    } catch (const Overflow&) {
    }
    std::vector<BlockResult> out;
    for (std::size_t i = 0; i < cols.size(); i += kWidth64) {
      const std::vector<std::size_t> part(cols.begin() + static_cast<std::ptrdiff_t>(i),
                                          cols.begin() + static_cast<std::ptrdiff_t>(std::min(i + kWidth64, cols.size())));
      const std::size_t stride64 = padded(part.size(), kernels);
      out.push_back(block_order<std::int64_t>(
          n_, part, stride64, k_max, track, [&](std::int64_t* x) { apply_psi_block(x, stride64, kernels); },
          kernels.is_zero64));
      if (out.back().spans) break;
    }
    return out;
  };

  std::vector<std::vector<BlockResult>> found(blocks);
  try {
    // Psi^k commutes with Psi, so Psi^k = sI on one block's columns extends
    // to their whole Psi-orbit span. If that span is everything, block 0
    // alone gives the order, and its first hit is minimal because every
    // smaller +-I power would have shown up there too.
    found[0] = run(0, blocks > 1);
    for (const auto& r : found[0])
      if (r.spans) return make_signed_order(r.k, r.sign);
    parallel_for(blocks - 1, [&](std::size_t b) { found[b + 1] = run(b + 1, false); });
  } catch (const Overflow&) {
    return coxlab::find_signed_order(dense(), k_max);
  }

  // Per block the admissible exponents are the multiples of k_b, so the
  // whole matrix needs a multiple of L = lcm(k_b). At L every block is
  // +-I with sign s_b^(L/k_b); if those disagree, 2L gives +I.
  std::size_t l = 1;
  for (const auto& list : found)
    for (const auto& r : list) {
      l = std::lcm(l, r.k);
      if (l > k_max) throw NotPeriodic(k_max);
    }
  int sign = 0;
  bool agree = true;
  for (const auto& list : found)
    for (const auto& r : list) {
      const int s = (l / r.k) % 2 ? r.sign : 1;
      if (sign == 0) sign = s;
      agree = agree && s == sign;
    }
  if (agree) return make_signed_order(l, sign);
  if (2 * l > k_max) throw NotPeriodic(k_max);
  return make_signed_order(2 * l, 1);
}

}  // namespace coxlab
