#include <type_traits>

#include "simd/tables.hpp"

namespace coxlab::simd {

namespace {

template <class T>
inline std::uint64_t fold(T x) {
  using U = std::make_unsigned_t<T>;
  return x < 0 ? static_cast<U>(U{0} - static_cast<U>(x)) : static_cast<U>(x);
}

template <class T>
std::uint64_t psi(T* rows, std::size_t w, const EdgePair* edges, std::size_t count) {
  std::uint64_t acc = 0;
  for (std::size_t e = 0; e < count; ++e) {
    T* dst = rows + edges[e].lower * w;
    const T* src = rows + edges[e].upper * w;
    for (std::size_t i = 0; i < w; ++i) {
      dst[i] = static_cast<T>(dst[i] - src[i]);
      acc |= fold(dst[i]);
    }
  }
  for (std::size_t e = 0; e < count; ++e) {
    T* dst = rows + edges[e].upper * w;
    const T* src = rows + edges[e].lower * w;
    for (std::size_t i = 0; i < w; ++i) {
      dst[i] = static_cast<T>(dst[i] + src[i]);
      acc |= fold(dst[i]);
    }
  }
  return acc;
}

template <class T>
bool is_zero(const T* src, std::size_t n) {
  T acc = 0;
  for (std::size_t i = 0; i < n; ++i) acc |= src[i];
  return acc == 0;
}

}  // namespace

const Kernels kScalarKernels{Isa::Scalar, "scalar", psi<std::int8_t>, psi<std::int16_t>, psi<std::int64_t>, is_zero<std::int8_t>, is_zero<std::int16_t>,
                             is_zero<std::int64_t>};

}  // namespace coxlab::simd
