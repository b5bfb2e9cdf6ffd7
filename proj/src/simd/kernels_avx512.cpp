#include <immintrin.h>

#include "simd/tables.hpp"

namespace coxlab::simd {

namespace {

// 64 x int8, 32 x int16 (both need BW) or 8 x int64 per register.
struct Lanes8 {
  using T = std::int8_t;
  static constexpr std::size_t kStep = 64;
  static __m512i add(__m512i a, __m512i b) { return _mm512_add_epi8(a, b); }
  static __m512i sub(__m512i a, __m512i b) { return _mm512_sub_epi8(a, b); }
  static __m512i fold(__m512i x) { return _mm512_abs_epi8(x); }
  static std::uint64_t reduce(__m512i acc) {
    std::uint64_t out = static_cast<std::uint64_t>(_mm512_reduce_or_epi64(acc));
    out = out | out >> 16 | out >> 32 | out >> 48;
    return (out | out >> 8) & 0xff;
  }
};

struct Lanes16 {
  using T = std::int16_t;
  static constexpr std::size_t kStep = 32;
  static __m512i add(__m512i a, __m512i b) { return _mm512_add_epi16(a, b); }
  static __m512i sub(__m512i a, __m512i b) { return _mm512_sub_epi16(a, b); }
  static __m512i fold(__m512i x) { return _mm512_abs_epi16(x); }
  static std::uint64_t reduce(__m512i acc) {
    std::uint64_t out = static_cast<std::uint64_t>(_mm512_reduce_or_epi64(acc));
    return (out | out >> 16 | out >> 32 | out >> 48) & 0xffff;
  }
};

struct Lanes64 {
  using T = std::int64_t;
  static constexpr std::size_t kStep = 8;
  static __m512i add(__m512i a, __m512i b) { return _mm512_add_epi64(a, b); }
  static __m512i sub(__m512i a, __m512i b) { return _mm512_sub_epi64(a, b); }
  static __m512i fold(__m512i x) { return _mm512_abs_epi64(x); }
  static std::uint64_t reduce(__m512i acc) { return static_cast<std::uint64_t>(_mm512_reduce_or_epi64(acc)); }
};

template <class L>
std::uint64_t psi(typename L::T* rows, std::size_t w, const EdgePair* edges, std::size_t count) {
  __m512i acc = _mm512_setzero_si512();
  for (std::size_t e = 0; e < count; ++e) {
    auto* dst = rows + edges[e].lower * w;
    const auto* src = rows + edges[e].upper * w;
    for (std::size_t i = 0; i < w; i += L::kStep) {
      const __m512i v = L::sub(_mm512_loadu_si512(dst + i), _mm512_loadu_si512(src + i));
      _mm512_storeu_si512(dst + i, v);
      acc = _mm512_or_si512(acc, L::fold(v));
    }
  }
  for (std::size_t e = 0; e < count; ++e) {
    auto* dst = rows + edges[e].upper * w;
    const auto* src = rows + edges[e].lower * w;
    for (std::size_t i = 0; i < w; i += L::kStep) {
      const __m512i v = L::add(_mm512_loadu_si512(dst + i), _mm512_loadu_si512(src + i));
      _mm512_storeu_si512(dst + i, v);
      acc = _mm512_or_si512(acc, L::fold(v));
    }
  }
  return L::reduce(acc);
}

template <class T>
bool is_zero(const T* src, std::size_t n) {
  const std::size_t per = 64 / sizeof(T);
  __m512i acc = _mm512_setzero_si512();
  std::size_t i = 0;
  for (; i + per <= n; i += per) acc = _mm512_or_si512(acc, _mm512_loadu_si512(src + i));
  T tail = 0;
  for (; i < n; ++i) tail |= src[i];
  return tail == 0 && _mm512_test_epi64_mask(acc, acc) == 0;
}

}  // namespace

const Kernels kAvx512Kernels{Isa::Avx512, "avx512", psi<Lanes8>, psi<Lanes16>, psi<Lanes64>,
                             is_zero<std::int8_t>, is_zero<std::int16_t>, is_zero<std::int64_t>};

}  // namespace coxlab::simd
