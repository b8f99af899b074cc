#pragma once

#include "topo/kernels.hpp"

namespace topo::kernels::detail {

#if defined(TOPO_HAVE_AVX2_BUILD)
// Defined in kernels_avx2.cpp (compiled with -mavx2). Callers must verify
// AVX2 support at runtime before invoking anything in the returned table.
const Ops& avx2_ops();
#endif

}  // namespace topo::kernels::detail
