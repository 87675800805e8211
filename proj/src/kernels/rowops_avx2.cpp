#include "linstrand/kernels.hpp"

#if LINSTRAND_HAVE_AVX2_KERNELS

#include <immintrin.h>

namespace linstrand::kernels {

namespace {

// r = x mod p for exact integer-valued doubles 0 <= x < 2^53, via a floored
// reciprocal quotient plus one correction step in each direction.
__attribute__((target("avx2,fma"))) inline __m256d reduce(__m256d x, __m256d vp, __m256d vpinv) {
  const __m256d q = _mm256_floor_pd(_mm256_mul_pd(x, vpinv));
  __m256d r = _mm256_fnmadd_pd(q, vp, x);
  const __m256d zero = _mm256_setzero_pd();
  r = _mm256_add_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, zero, _CMP_LT_OQ), vp));
  r = _mm256_sub_pd(r, _mm256_and_pd(_mm256_cmp_pd(r, vp, _CMP_GE_OQ), vp));
  return r;
}

__attribute__((target("avx2,fma"))) inline __m128i axpy4(__m128i d, __m128i s, __m256d vc, __m256d vp,
                                                          __m256d vpinv) {
  const __m256d x = _mm256_fmadd_pd(vc, _mm256_cvtepi32_pd(s), _mm256_cvtepi32_pd(d));
  return _mm256_cvttpd_epi32(reduce(x, vp, vpinv));
}

}  // namespace

__attribute__((target("avx2,fma"))) void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src,
                                                        std::uint32_t c, std::size_t len,
                                                        std::uint32_t p) noexcept {
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vpinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
  std::size_t k = 0;
  for (; k + 8 <= len; k += 8) {
    const __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + k));
    const __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + k));
    const __m128i lo = axpy4(_mm256_castsi256_si128(d), _mm256_castsi256_si128(s), vc, vp, vpinv);
    const __m128i hi = axpy4(_mm256_extracti128_si256(d, 1), _mm256_extracti128_si256(s, 1), vc, vp, vpinv);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + k), _mm256_set_m128i(hi, lo));
  }
  if (k < len) axpy_mod_scalar(dst + k, src + k, c, len - k, p);
}

__attribute__((target("avx2,fma"))) void scale_mod_avx2(std::uint32_t* dst, std::uint32_t c, std::size_t len,
                                                         std::uint32_t p) noexcept {
  const __m256d vp = _mm256_set1_pd(static_cast<double>(p));
  const __m256d vpinv = _mm256_set1_pd(1.0 / static_cast<double>(p));
  const __m256d vc = _mm256_set1_pd(static_cast<double>(c));
  std::size_t k = 0;
  for (; k + 4 <= len; k += 4) {
    const __m128i d = _mm_loadu_si128(reinterpret_cast<const __m128i*>(dst + k));
    const __m256d x = _mm256_mul_pd(vc, _mm256_cvtepi32_pd(d));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(dst + k), _mm256_cvttpd_epi32(reduce(x, vp, vpinv)));
  }
  if (k < len) scale_mod_scalar(dst + k, c, len - k, p);
}

}  // namespace linstrand::kernels

#endif
