#include <cstdlib>
#include <string_view>

#include "coxlab/error.hpp"
#include "simd/tables.hpp"

namespace coxlab::simd {

namespace {

bool cpu_has(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return true;
#if defined(COXLAB_HAVE_X86_KERNELS)
    case Isa::Avx2:
      return __builtin_cpu_supports("avx2");
    case Isa::Avx512:
      return __builtin_cpu_supports("avx512f") && __builtin_cpu_supports("avx512bw");
#else
    default:
      return false;
#endif
  }
  return false;
}

const Kernels& pick() {
  if (const char* env = std::getenv("COXLAB_SIMD")) {
    const std::string_view v(env);
    if (v == "scalar") return kernels_for(Isa::Scalar);
    if (v == "avx2") return kernels_for(Isa::Avx2);
    if (v == "avx512") return kernels_for(Isa::Avx512);
    if (!v.empty() && v != "auto") throw InvalidArgument("COXLAB_SIMD must be scalar, avx2, avx512 or auto");
  }
  const auto all = supported();
  return kernels_for(all.back());
}

}  // namespace

std::vector<Isa> supported() {
  std::vector<Isa> out;
  for (Isa isa : {Isa::Scalar, Isa::Avx2, Isa::Avx512})
    if (cpu_has(isa)) out.push_back(isa);
  return out;
}

const Kernels& kernels_for(Isa isa) {
  if (!cpu_has(isa)) throw InvalidArgument("SIMD variant " + to_string(isa) + " is not supported on this CPU");
  switch (isa) {
#if defined(COXLAB_HAVE_X86_KERNELS)
    case Isa::Avx2:
      return kAvx2Kernels;
    case Isa::Avx512:
      return kAvx512Kernels;
#endif
    default:
      return kScalarKernels;
  }
}

const Kernels& active() {
  static const Kernels& k = pick();
  return k;
}

std::string to_string(Isa isa) {
  switch (isa) {
    case Isa::Scalar:
      return "scalar";
    case Isa::Avx2:
      return "avx2";
    case Isa::Avx512:
      return "avx512";
  }
  return "?";
}

}  // namespace coxlab::simd
