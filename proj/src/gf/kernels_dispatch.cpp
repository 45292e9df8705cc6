#include <cstdlib>
#include <cstring>

#include "nis2/gf/kernels.hpp"

namespace nis2::gf::kernels {

#if defined(NIS2_HAVE_AVX2)
const Table& avx2_table();
#endif
#if defined(NIS2_HAVE_NEON)
const Table& neon_table();
#endif

const Table* avx2() {
#if defined(NIS2_HAVE_AVX2)
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &avx2_table() : nullptr;
#else
  return nullptr;
#endif
}

const Table* neon() {
#if defined(NIS2_HAVE_NEON)
  // Advanced SIMD is mandatory on aarch64.
  return &neon_table();
#else
  return nullptr;
#endif
}

const Table& active() {
  static const Table& chosen = []() -> const Table& {
    const char* env = std::getenv("NIS2_KERNELS");
    if (env && std::strcmp(env, "scalar") == 0) return scalar();
    if (const Table* t = avx2()) return *t;
    if (const Table* t = neon()) return *t;
    return scalar();
  }();
  return chosen;
}

}  // namespace nis2::gf::kernels
