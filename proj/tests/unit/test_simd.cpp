#include <doctest.h>

#include <vector>

#include "dcolor/rng.hpp"
#include "dcolor/simd/kernels.hpp"

using namespace dcolor;

TEST_CASE("simd kernels match the scalar reference") {
  const simd::KernelTable* fast = simd::avx2_table();
  if (!fast) {
    MESSAGE("AVX2 unavailable; only the scalar table is exercised");
    fast = &simd::scalar_table();
  }
  const auto& ref = simd::scalar_table();
  Rng rng(99);
  for (std::uint32_t p : {2U, 3U, 101U, 65537U, 2147483647U}) {
    for (std::size_t len = 0; len < 70; ++len) {
      std::vector<std::uint32_t> a(len), b(len);
      for (std::size_t i = 0; i < len; ++i) {
        // Bias toward the ends of the range where carries happen.
        a[i] = rng.bernoulli(0.3) ? p - 1 - static_cast<std::uint32_t>(rng.below(std::min<std::uint32_t>(p, 3)))
                                  : static_cast<std::uint32_t>(rng.below(p));
        b[i] = static_cast<std::uint32_t>(rng.below(p));
      }
      auto x = a, y = a;
      ref.add_mod(x.data(), b.data(), len, p);
      fast->add_mod(y.data(), b.data(), len, p);
      CHECK(x == y);
      x = a;
      y = a;
      ref.sub_mod(x.data(), b.data(), len, p);
      fast->sub_mod(y.data(), b.data(), len, p);
      CHECK(x == y);
      for (std::size_t i = 0; i < len; ++i) CHECK(x[i] == (a[i] + static_cast<std::uint64_t>(p) - b[i]) % p);
    }
  }
  for (std::size_t words = 0; words < 20; ++words) {
    for (int rep = 0; rep < 20; ++rep) {
      std::vector<std::uint64_t> a(words), b(words);
      for (std::size_t i = 0; i < words; ++i) {
        a[i] = rng.next() & rng.next() & rng.next();
        b[i] = rng.next() & rng.next() & rng.next();
      }
      CHECK(ref.intersects(a.data(), b.data(), words) == fast->intersects(a.data(), b.data(), words));
      CHECK(ref.popcount_and(a.data(), b.data(), words) == fast->popcount_and(a.data(), b.data(), words));
      std::size_t want = 0;
      for (std::size_t i = 0; i < words; ++i) want += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
      CHECK(ref.popcount_and(a.data(), b.data(), words) == want);
    }
  }
}

TEST_CASE("scalar add_mod wraps at p") {
  std::uint32_t acc[3] = {100, 0, 50};
  const std::uint32_t x[3] = {1, 100, 51};
  simd::scalar_table().add_mod(acc, x, 3, 101);
  CHECK(acc[0] == 0);
  CHECK(acc[1] == 100);
  CHECK(acc[2] == 0);
}

TEST_CASE("active table is one of the known tables") {
  const auto& t = simd::active();
  CHECK((t.name == "scalar" || t.name == "avx2"));
}
