#include "linstrand/kernels.hpp"

namespace linstrand::kernels {

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t c, std::size_t len,
                     std::uint32_t p) noexcept {
  const std::uint64_t cc = c;
  for (std::size_t k = 0; k < len; ++k)
    dst[k] = static_cast<std::uint32_t>((dst[k] + cc * src[k]) % p);
}

void scale_mod_scalar(std::uint32_t* dst, std::uint32_t c, std::size_t len, std::uint32_t p) noexcept {
  const std::uint64_t cc = c;
  for (std::size_t k = 0; k < len; ++k) dst[k] = static_cast<std::uint32_t>(cc * dst[k] % p);
}

}  // namespace linstrand::kernels
