#pragma once

// Inner loops over F_p vectors and color bitsets. Each kernel has a portable
// scalar reference and an AVX2 variant; the table is chosen once at startup
// from CPUID, overridable with DCOLOR_SIMD=scalar|avx2.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace dcolor::simd {

// All F_p kernels require p < 2^31 and inputs already reduced mod p.
struct KernelTable {
  void (*add_mod)(std::uint32_t* acc, const std::uint32_t* x, std::size_t len, std::uint32_t p);
  void (*sub_mod)(std::uint32_t* acc, const std::uint32_t* x, std::size_t len, std::uint32_t p);
  bool (*intersects)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  std::size_t (*popcount_and)(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
  std::string_view name;
};

namespace scalar {
void add_mod(std::uint32_t* acc, const std::uint32_t* x, std::size_t len, std::uint32_t p);
void sub_mod(std::uint32_t* acc, const std::uint32_t* x, std::size_t len, std::uint32_t p);
bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
}  // namespace scalar

#if defined(__x86_64__) || defined(__i386__)
#define DCOLOR_HAVE_AVX2_KERNELS 1
namespace avx2 {
void add_mod(std::uint32_t* acc, const std::uint32_t* x, std::size_t len, std::uint32_t p);
void sub_mod(std::uint32_t* acc, const std::uint32_t* x, std::size_t len, std::uint32_t p);
bool intersects(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
std::size_t popcount_and(const std::uint64_t* a, const std::uint64_t* b, std::size_t words);
}  // namespace avx2
#endif

bool cpu_has_avx2();

const KernelTable& scalar_table();
// Null when the build or the CPU lacks AVX2.
const KernelTable* avx2_table();

const KernelTable& active();

}  // namespace dcolor::simd
