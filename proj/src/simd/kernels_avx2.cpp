#include "dcolor/simd/kernels.hpp"

#if defined(DCOLOR_HAVE_AVX2_KERNELS)

#include <immintrin.h>

#include <bit>

namespace dcolor::simd::avx2 {

// a+b < 2^32 because both are below p < 2^31. When s < p, s-p wraps to a
// value above s, so an unsigned min picks the reduced sum in both cases.
__attribute__((target("avx2"))) void add_mod(std::uint32_t* acc, const std::uint32_t* x,
                                             std::size_t len, std::uint32_t p) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i s = _mm256_add_epi32(a, b);
    __m256i r = _mm256_min_epu32(s, _mm256_sub_epi32(s, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), r);
  }
  scalar::add_mod(acc + i, x + i, len - i, p);
}

__attribute__((target("avx2"))) void sub_mod(std::uint32_t* acc, const std::uint32_t* x,
                                             std::size_t len, std::uint32_t p) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= len; i += 8) {
    __m256i a = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(acc + i));
    __m256i b = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i));
    __m256i d = _mm256_sub_epi32(a, b);
    __m256i r = _mm256_min_epu32(d, _mm256_add_epi32(d, vp));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(acc + i), r);
  }
  scalar::sub_mod(acc + i, x + i, len - i, p);
}

__attribute__((target("avx2"))) bool intersects(const std::uint64_t* a, const std::uint64_t* b,
                                                std::size_t words) {
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    if (!_mm256_testz_si256(va, vb)) return true;
  }
  return scalar::intersects(a + i, b + i, words - i);
}

__attribute__((target("avx2,popcnt"))) std::size_t popcount_and(const std::uint64_t* a,
                                                                const std::uint64_t* b,
                                                                std::size_t words) {
  std::size_t total = 0;
  std::size_t i = 0;
  for (; i + 4 <= words; i += 4) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), _mm256_and_si256(va, vb));
    total += static_cast<std::size_t>(__builtin_popcountll(lanes[0]) + __builtin_popcountll(lanes[1]) +
                                      __builtin_popcountll(lanes[2]) + __builtin_popcountll(lanes[3]));
  }
  return total + scalar::popcount_and(a + i, b + i, words - i);
}

}  // namespace dcolor::simd::avx2

#endif
