#include <doctest.h>

#include <random>
#include <vector>

#include "linstrand/kernels.hpp"
#include "linstrand/linalg.hpp"

using namespace linstrand;
using namespace linstrand::kernels;

namespace {

std::vector<std::uint32_t> residues(std::mt19937_64& rng, std::size_t len, std::uint32_t p) {
  std::vector<std::uint32_t> v(len);
  for (auto& x : v) x = static_cast<std::uint32_t>(rng() % p);
  return v;
}

const std::uint32_t kPrimes[] = {3, 5, 32003, 65521, 1000003, 16777213, (1u << 26) - 5};

}  // namespace

TEST_CASE("scalar axpy and scale follow the definition") {
  std::mt19937_64 rng(1);
  for (std::uint32_t p : kPrimes) {
    auto dst = residues(rng, 37, p);
    const auto src = residues(rng, 37, p);
    const std::uint32_t c = static_cast<std::uint32_t>(rng() % p);
    auto expect = dst;
    for (std::size_t k = 0; k < dst.size(); ++k)
      expect[k] = static_cast<std::uint32_t>((expect[k] + std::uint64_t{c} * src[k]) % p);
    axpy_mod_scalar(dst.data(), src.data(), c, dst.size(), p);
    CHECK(dst == expect);
    for (std::size_t k = 0; k < dst.size(); ++k) expect[k] = static_cast<std::uint32_t>(std::uint64_t{c} * expect[k] % p);
    scale_mod_scalar(dst.data(), c, dst.size(), p);
    CHECK(dst == expect);
  }
}

TEST_CASE("vector kernels match the scalar reference") {
  if (!cpu_supports(Isa::Avx2)) {
    MESSAGE("AVX2 unavailable; only the scalar kernels are exercised");
    return;
  }
  std::mt19937_64 rng(2);
  for (std::uint32_t p : kPrimes) {
    const auto axpy = select_axpy(p, Isa::Avx2);
    const auto scale = select_scale(p, Isa::Avx2);
    for (std::size_t len : {0u, 1u, 3u, 4u, 7u, 8u, 9u, 15u, 16u, 17u, 63u, 64u, 65u, 1000u}) {
      for (int rep = 0; rep < 4; ++rep) {
        auto a = residues(rng, len, p), b = a;
        const auto src = residues(rng, len, p);
        const std::uint32_t c = rep == 0 ? p - 1 : static_cast<std::uint32_t>(rng() % p);
        axpy_mod_scalar(a.data(), src.data(), c, len, p);
        axpy(b.data(), src.data(), c, len, p);
        CHECK(a == b);
        scale_mod_scalar(a.data(), c, len, p);
        scale(b.data(), c, len, p);
        CHECK(a == b);
      }
    }
  }
}

TEST_CASE("large primes fall back to scalar kernels") {
  const std::uint32_t p = 2147483647u;
  CHECK(select_axpy(p, Isa::Avx2) == &axpy_mod_scalar);
  CHECK(select_scale(p, Isa::Avx2) == &scale_mod_scalar);
  CHECK(select_axpy(32003, Isa::Scalar) == &axpy_mod_scalar);
}

TEST_CASE("dense elimination is identical under both kernel sets") {
  std::mt19937_64 rng(3);
  for (std::uint32_t p : {32003u, 7u}) {
    for (int trial = 0; trial < 20; ++trial) {
      const std::size_t r = 1 + rng() % 40, c = 1 + rng() % 40;
      auto a = residues(rng, r * c, p);
      for (std::size_t k = 0; k < a.size(); ++k)
        if (rng() % 3 == 0) a[k] = 0;
      auto b = a, e = a, f = a;
      CHECK(detail::rank_mod_p_dense(a, r, c, p, Isa::Scalar) == detail::rank_mod_p_dense(b, r, c, p, Isa::Avx2));
      const auto pe = detail::rref_mod_p_dense(e, r, c, p, Isa::Scalar);
      const auto pf = detail::rref_mod_p_dense(f, r, c, p, Isa::Avx2);
      CHECK(pe == pf);
      CHECK(e == f);
    }
  }
}

TEST_CASE("isa names") {
  CHECK(isa_name(Isa::Scalar) == "scalar");
  CHECK(isa_name(Isa::Avx2) == "avx2");
  CHECK(cpu_supports(Isa::Scalar));
}
