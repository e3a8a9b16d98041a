#include "mubw/kernels.hpp"

#include <cstdlib>
#include <string_view>

namespace mubw::kernels {

bool cpu_supports_avx2() {
#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
  return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
  return false;
#endif
}

const KernelTable& active_kernels() {
  static const KernelTable* const chosen = [] {
    if (const char* env = std::getenv("MUBW_KERNELS")) {
      const std::string_view want(env);
      if (want == "scalar") return &scalar_kernels();
      if (want == "avx2") {
        if (const KernelTable* t = avx2_kernels()) return t;
        return &scalar_kernels();
      }
    }
    if (const KernelTable* t = avx2_kernels()) return t;
    return &scalar_kernels();
  }();
  return *chosen;
}

}  // namespace mubw::kernels
