#pragma once

#include "rocaware/simd/kernels.hpp"

namespace rocaware::simd::detail {

// nullptr when the variant is not compiled for this target.
const KernelTable* avx2_table();
bool avx2_supported();

const KernelTable* neon_table();

} // namespace rocaware::simd::detail
