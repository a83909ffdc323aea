#include <cstdlib>
#include <string_view>

#include "mccp/bit_kernels.hpp"

namespace mccp::simd {

#if defined(MCCP_HAVE_AVX2_TU)
const BitKernels& avx2_kernel_table();  // bit_kernels_avx2.cpp
#endif

const BitKernels* avx2_kernels() {
#if defined(MCCP_HAVE_AVX2_TU)
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
  }();
  return supported ? &avx2_kernel_table() : nullptr;
#else
  return nullptr;
#endif
}

const BitKernels& active_kernels() {
  static const BitKernels& table = []() -> const BitKernels& {
    const char* force = std::getenv("MCCP_FORCE_SCALAR");
    if (force != nullptr && std::string_view(force) != "0") return scalar_kernels();
    if (const BitKernels* avx2 = avx2_kernels()) return *avx2;
    return scalar_kernels();
  }();
  return table;
}

}  // namespace mccp::simd
