#include <cstdlib>
#include <string_view>

#include "metacyclic/simd/kernels.hpp"

namespace metacyclic::simd {

#ifndef METACYCLIC_HAVE_AVX2
const KernelTable* avx2_kernels() { return nullptr; }
#endif

bool cpu_has_avx2() {
#if defined(METACYCLIC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

namespace {

const KernelTable& select_kernels() {
  const KernelTable* avx2 = cpu_has_avx2() ? avx2_kernels() : nullptr;
  if (const char* forced = std::getenv("METACYCLIC_KERNELS")) {
    const std::string_view choice(forced);
    if (choice == "scalar") return scalar_kernels();
    if (choice == "avx2" && avx2 != nullptr) return *avx2;
  }
  return avx2 != nullptr ? *avx2 : scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable& table = select_kernels();
  return table;
}

}  // namespace metacyclic::simd
