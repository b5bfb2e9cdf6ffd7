#include <immintrin.h>

#include "simd/tables.hpp"

namespace coxlab::simd {

namespace {

// 32 x int8, 16 x int16 or 4 x int64 per register.
struct Lanes8 {
  using T = std::int8_t;
  static constexpr std::size_t kStep = 32;
  static __m256i add(__m256i a, __m256i b) { return _mm256_add_epi8(a, b); }
  static __m256i sub(__m256i a, __m256i b) { return _mm256_sub_epi8(a, b); }
  static __m256i fold(__m256i x) { return _mm256_abs_epi8(x); }
};

struct Lanes16 {
  using T = std::int16_t;
  static constexpr std::size_t kStep = 16;
  static __m256i add(__m256i a, __m256i b) { return _mm256_add_epi16(a, b); }
  static __m256i sub(__m256i a, __m256i b) { return _mm256_sub_epi16(a, b); }
  static __m256i fold(__m256i x) { return _mm256_abs_epi16(x); }
};

struct Lanes64 {
  using T = std::int64_t;
  static constexpr std::size_t kStep = 4;
  static __m256i add(__m256i a, __m256i b) { return _mm256_add_epi64(a, b); }
  static __m256i sub(__m256i a, __m256i b) { return _mm256_sub_epi64(a, b); }
  // no 64-bit abs before AVX-512
  static __m256i fold(__m256i x) {
    const __m256i neg = _mm256_cmpgt_epi64(_mm256_setzero_si256(), x);
    return _mm256_sub_epi64(_mm256_xor_si256(x, neg), neg);
  }
};

template <class L>
std::uint64_t psi(typename L::T* rows, std::size_t w, const EdgePair* edges, std::size_t count) {
  __m256i acc = _mm256_setzero_si256();
  for (std::size_t e = 0; e < count; ++e) {
    auto* dst = reinterpret_cast<__m256i*>(rows + edges[e].lower * w);
    const auto* src = reinterpret_cast<const __m256i*>(rows + edges[e].upper * w);
    for (std::size_t i = 0; i < w / L::kStep; ++i) {
      const __m256i v = L::sub(_mm256_loadu_si256(dst + i), _mm256_loadu_si256(src + i));
      _mm256_storeu_si256(dst + i, v);
      acc = _mm256_or_si256(acc, L::fold(v));
    }
  }
  for (std::size_t e = 0; e < count; ++e) {
    auto* dst = reinterpret_cast<__m256i*>(rows + edges[e].upper * w);
    const auto* src = reinterpret_cast<const __m256i*>(rows + edges[e].lower * w);
    for (std::size_t i = 0; i < w / L::kStep; ++i) {
      const __m256i v = L::add(_mm256_loadu_si256(dst + i), _mm256_loadu_si256(src + i));
      _mm256_storeu_si256(dst + i, v);
      acc = _mm256_or_si256(acc, L::fold(v));
    }
  }
  alignas(32) std::uint64_t parts[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(parts), acc);
  std::uint64_t out = parts[0] | parts[1] | parts[2] | parts[3];
  if constexpr (sizeof(typename L::T) <= 2) out = (out | out >> 16 | out >> 32 | out >> 48) & 0xffff;
  if constexpr (sizeof(typename L::T) == 1) out = (out | out >> 8) & 0xff;
  return out;
}

template <class T>
bool is_zero(const T* src, std::size_t n) {
  const std::size_t per = 32 / sizeof(T);
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + per <= n; i += per) acc = _mm256_or_si256(acc, _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i)));
  T tail = 0;
  for (; i < n; ++i) tail |= src[i];
  return tail == 0 && _mm256_testz_si256(acc, acc);
}

}  // namespace

const Kernels kAvx2Kernels{Isa::Avx2, "avx2", psi<Lanes8>, psi<Lanes16>, psi<Lanes64>,
                           is_zero<std::int8_t>, is_zero<std::int16_t>, is_zero<std::int64_t>};

}  // namespace coxlab::simd
