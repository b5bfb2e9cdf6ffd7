#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace coxlab::simd {

enum class Isa { Scalar, Avx2, Avx512 };

/// Cover edge of J(P) as row indices into a block.
struct EdgePair {
  std::uint32_t upper;
  std::uint32_t lower;
};

// A block is N rows of `width` lanes, row-major. One psi call applies
// Z^T Z^{-1}: rows[lower] -= rows[upper] over all edges, then
// rows[upper] += rows[lower] over all edges, both in the given order.
//
// The return value is the OR of |x| (as the unsigned lane type, so the
// most negative value reads as 2^(bits-1)) over every value written.
// Callers keep |entries| below a threshold T with 2T inside the lane range;
// the first value to reach T is itself written and recorded before anything
// can wrap, so one check after the call is enough.
//
// Vector variants require `width` to be a multiple of kWidthQuantum.
inline constexpr std::size_t kWidthQuantum = 64;

struct Kernels {
  Isa isa;
  const char* name;
  std::uint64_t (*psi8)(std::int8_t* rows, std::size_t width, const EdgePair* edges, std::size_t count);
  std::uint64_t (*psi16)(std::int16_t* rows, std::size_t width, const EdgePair* edges, std::size_t count);
  std::uint64_t (*psi64)(std::int64_t* rows, std::size_t width, const EdgePair* edges, std::size_t count);
  bool (*is_zero8)(const std::int8_t* src, std::size_t n);
  bool (*is_zero16)(const std::int16_t* src, std::size_t n);
  bool (*is_zero64)(const std::int64_t* src, std::size_t n);
};

/// Variants the running CPU can execute, scalar first.
std::vector<Isa> supported();

/// Kernel table for one variant; throws InvalidArgument if unsupported.
const Kernels& kernels_for(Isa isa);

/// Best supported variant, unless COXLAB_SIMD=scalar|avx2|avx512 says otherwise.
const Kernels& active();

std::string to_string(Isa isa);

}  // namespace coxlab::simd
