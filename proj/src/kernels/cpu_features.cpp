#include "tsrelay/kernels/event_count.hpp"

namespace tsrelay::kernels {

std::string_view to_string(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(TSRELAY_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
  static const bool supported = [] {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2") != 0;
  }();
  return supported;
#else
  return false;
#endif
}

Isa best_isa() { return avx2_available() ? Isa::avx2 : Isa::scalar; }

}  // namespace tsrelay::kernels
