#include <cstdlib>
#include <string_view>

#include "uninorm/kernels.hpp"

namespace uninorm::kernels {

#ifdef UNINORM_HAVE_AVX2
const KernelSet& avx2_impl();
#endif

const KernelSet* avx2() {
#ifdef UNINORM_HAVE_AVX2
  static const bool supported = __builtin_cpu_supports("avx2");
  if (supported) return &avx2_impl();
#endif
  return nullptr;
}

const KernelSet& active() {
  static const KernelSet* chosen = [] {
    const char* forced = std::getenv("UNINORM_KERNELS");
    if (forced != nullptr && std::string_view(forced) == "scalar") return &scalar();
    if (const KernelSet* k = avx2()) return k;
    return &scalar();
  }();
  return *chosen;
}

}  // namespace uninorm::kernels
