#pragma once

// Deterministic randomness. std::mt19937_64 is bit-specified by the standard;
// the distributions below are written out so results do not depend on the
// standard library's distribution implementations.

#include <cmath>
#include <cstdint>
#include <random>

namespace dcolor {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Counter-mode hash of a seed and up to three coordinates.
inline std::uint64_t hash_mix(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                              std::uint64_t c = 0) {
  std::uint64_t h = splitmix64(seed ^ 0x243F6A8885A308D3ULL);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ (b + 0x13198A2E03707344ULL));
  h = splitmix64(h ^ (c + 0xA4093822299F31D0ULL));
  return h;
}

inline double to_unit(std::uint64_t bits) {
  return static_cast<double>(bits >> 11) * 0x1.0p-53;
}

// Stream tags keep independent consumers of one seed apart.
enum class SeedTag : std::uint64_t {
  kShuffle = 1,
  kPalette,
  kActivation,
  kSample,
  kNSample,
  kISample,
  kSketchMembership,
  kSketchPhiR,
  kAttempt,
  kGenerator,
};

inline std::uint64_t derive_seed(std::uint64_t seed, SeedTag tag, std::uint64_t extra = 0) {
  return hash_mix(seed, static_cast<std::uint64_t>(tag), extra);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform integer in [0, bound) by Lemire's multiply-shift with rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    unsigned __int128 m = static_cast<unsigned __int128>(next()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>(next()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  double uniform() { return to_unit(next()); }

  bool bernoulli(double p) {
    if (p >= 1.0) return true;
    if (p <= 0.0) return false;
    return uniform() < p;
  }

  // Number of failures before the first success of a Bernoulli(p) sequence.
  std::uint64_t geometric(double p) {
    if (p >= 1.0) return 0;
    double u = 1.0 - uniform();  // (0, 1]
    double k = std::floor(std::log(u) / std::log1p(-p));
    if (!(k < 1.8e19)) return UINT64_MAX;
    return static_cast<std::uint64_t>(k);
  }

  template <class It>
  void shuffle(It first, It last) {
    auto len = static_cast<std::uint64_t>(last - first);
    for (std::uint64_t i = len; i > 1; --i) {
      std::uint64_t j = below(i);
      std::swap(first[i - 1], first[j]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace dcolor
