#pragma once

#include "coxlab/simd/kernels.hpp"

namespace coxlab::simd {

extern const Kernels kScalarKernels;
#if defined(COXLAB_HAVE_X86_KERNELS)
extern const Kernels kAvx2Kernels;
extern const Kernels kAvx512Kernels;
#endif

}  // namespace coxlab::simd
