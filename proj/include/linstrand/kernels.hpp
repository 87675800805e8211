#pragma once

// Row kernels for dense elimination over F_p.
//
// Every kernel has a portable scalar reference and, on x86-64, an AVX2+FMA
// variant selected at runtime. The vector variants compute in double
// precision, which is exact while products stay below 2^53, so they are only
// dispatched for p < kSimdPrimeLimit. Both variants produce identical output.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace linstrand::kernels {

enum class Isa { Scalar, Avx2 };

inline constexpr std::uint32_t kSimdPrimeLimit = 1u << 26;

/// dst[k] = (dst[k] + c * src[k]) mod p. Inputs are canonical residues.
using AxpyFn = void (*)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t len,
                        std::uint32_t p) noexcept;
/// dst[k] = (c * dst[k]) mod p.
using ScaleFn = void (*)(std::uint32_t* dst, std::uint32_t c, std::size_t len, std::uint32_t p) noexcept;

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t len,
                     std::uint32_t p) noexcept;
void scale_mod_scalar(std::uint32_t* dst, std::uint32_t c, std::size_t len, std::uint32_t p) noexcept;

#if defined(__x86_64__) || defined(_M_X64)
#define LINSTRAND_HAVE_AVX2_KERNELS 1
void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t len,
                   std::uint32_t p) noexcept;
void scale_mod_avx2(std::uint32_t* dst, std::uint32_t c, std::size_t len, std::uint32_t p) noexcept;
#else
#define LINSTRAND_HAVE_AVX2_KERNELS 0
#endif

bool cpu_supports(Isa isa) noexcept;

/// Best supported ISA, overridable with LINSTRAND_SIMD=scalar|avx2|auto.
Isa active_isa() noexcept;
std::string_view isa_name(Isa isa) noexcept;

/// Falls back to the scalar kernel when `isa` is unsupported or p is too large.
AxpyFn select_axpy(std::uint32_t p, Isa isa = active_isa()) noexcept;
ScaleFn select_scale(std::uint32_t p, Isa isa = active_isa()) noexcept;

}  // namespace linstrand::kernels
