#include "dcolor/simd/kernels.hpp"

#include <bit>
#include <cstdlib>
#include <cstring>

namespace dcolor::simd {

namespace scalar {

void add_mod(std::uint32_t* acc, const std::uint32_t* x, std::size_t len, std::uint32_t p) {
  for (std::size_t i = 0; i < len; ++i) {
    std::uint32_t s = acc[i] + x[i];
    acc[i] = s >= p ? s - p : s;
  }
}

void sub_mod(std::uint32_t* acc, const std::uint32_t* x, std::size_t len, std::uint32_t p) {
  for (std::size_t i = 0; i < len; ++i) {
    acc[i] = acc[i] >= x[i] ? acc[i] - x[i] : acc[i] + (p - x[i]);
  }
}

bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  for (std::size_t i = 0; i < words; ++i) {
    if (a[i] & b[i]) return true;
  }
  return false;
}

std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < words; ++i) total += std::popcount(a[i] & b[i]);
  return total;
}

}  // namespace scalar

bool cpu_has_avx2() {
#if defined(DCOLOR_HAVE_AVX2_KERNELS)
  return __builtin_cpu_supports("avx2");
#else
  return false;
#endif
}

const KernelTable& scalar_table() {
  static const KernelTable table{scalar::add_mod, scalar::sub_mod, scalar::intersects,
                                 scalar::popcount_and, "scalar"};
  return table;
}

const KernelTable* avx2_table() {
#if defined(DCOLOR_HAVE_AVX2_KERNELS)
  static const KernelTable table{avx2::add_mod, avx2::sub_mod, avx2::intersects,
                                 avx2::popcount_and, "avx2"};
  return cpu_has_avx2() ? &table : nullptr;
#else
  return nullptr;
#endif
}

namespace {

const KernelTable& select() {
  const char* env = std::getenv("DCOLOR_SIMD");
  if (env != nullptr && std::strcmp(env, "scalar") == 0) return scalar_table();
  if (const KernelTable* t = avx2_table()) return *t;
  return scalar_table();
}

}  // namespace

const KernelTable& active() {
  static const KernelTable& table = select();
  return table;
}

}  // namespace dcolor::simd
