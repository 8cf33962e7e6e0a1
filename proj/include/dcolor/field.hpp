#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dcolor/types.hpp"

namespace dcolor {

// Field elements are stored reduced in 32 bits; every prime used is < 2^31.
using Fp = std::uint32_t;

bool is_prime(std::uint64_t x);

struct FieldParams {
  std::uint32_t p = 0;

  // Smallest prime >= max(n + 1, 101). Column indices 1..n must stay nonzero.
  static FieldParams for_n(std::size_t n);
};

inline Fp add_mod(Fp a, Fp b, Fp p) {
  Fp s = a + b;
  return s >= p ? s - p : s;
}

inline Fp sub_mod(Fp a, Fp b, Fp p) { return a >= b ? a - b : a + (p - b); }

inline Fp mul_mod(Fp a, Fp b, Fp p) {
  return static_cast<Fp>(static_cast<std::uint64_t>(a) * b % p);
}

inline Fp neg_mod(Fp a, Fp p) { return a == 0 ? 0 : p - a; }

Fp pow_mod(Fp base, std::uint64_t exp, Fp p);
Fp inv_mod(Fp a, Fp p);

// Entry i (0-based) is (u+1)^i mod p for i < 2r.
std::vector<Fp> vandermonde_column(std::uint32_t r, Fp p, Vertex u);

// Writes (u+1)^0 .. (u+1)^(len-1) into out.
void vandermonde_powers(Fp p, Vertex u, std::size_t len, Fp* out);

}  // namespace dcolor
