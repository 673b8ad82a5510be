#pragma once

#include "mmwave/simd/kernels.hpp"

namespace mmwave::simd::detail {

extern const KernelTable kScalarTable;

#if defined(MMWAVE_HAVE_AVX2)
extern const KernelTable kAvx2Table;
#endif

#if defined(MMWAVE_HAVE_NEON)
extern const KernelTable kNeonTable;
#endif

}  // namespace mmwave::simd::detail
