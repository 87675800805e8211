#include <cstdlib>
#include <string>

#include "linstrand/kernels.hpp"

namespace linstrand::kernels {

bool cpu_supports(Isa isa) noexcept {
  switch (isa) {
    case Isa::Scalar:
      return true;
    case Isa::Avx2:
#if LINSTRAND_HAVE_AVX2_KERNELS
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() noexcept {
  static const Isa chosen = [] {
    const char* env = std::getenv("LINSTRAND_SIMD");
    const std::string pref = env ? env : "auto";
    if (pref == "scalar") return Isa::Scalar;
    return cpu_supports(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
  }();
  return chosen;
}

std::string_view isa_name(Isa isa) noexcept { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

AxpyFn select_axpy(std::uint32_t p, Isa isa) noexcept {
#if LINSTRAND_HAVE_AVX2_KERNELS
  if (isa == Isa::Avx2 && p < kSimdPrimeLimit && cpu_supports(Isa::Avx2)) return axpy_mod_avx2;
#endif
  (void)p;
  (void)isa;
  return axpy_mod_scalar;
}

ScaleFn select_scale(std::uint32_t p, Isa isa) noexcept {
#if LINSTRAND_HAVE_AVX2_KERNELS
  if (isa == Isa::Avx2 && p < kSimdPrimeLimit && cpu_supports(Isa::Avx2)) return scale_mod_avx2;
#endif
  (void)p;
  (void)isa;
  return scale_mod_scalar;
}

}  // namespace linstrand::kernels
