#include "dcolor/field.hpp"

namespace dcolor {

bool is_prime(std::uint64_t x) {
  if (x < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL}) {
    if (x % d == 0) return x == d;
  }
  for (std::uint64_t d = 11; d * d <= x; d += 2) {
    if (x % d == 0) return false;
  }
  return true;
}

FieldParams FieldParams::for_n(std::size_t n) {
  std::uint64_t c = std::max<std::uint64_t>(static_cast<std::uint64_t>(n) + 1, 101);
  while (!is_prime(c)) ++c;
  if (c >= (1ULL << 31)) throw SpecError("vertex count too large for the 31-bit field");
  return {static_cast<std::uint32_t>(c)};
}

Fp pow_mod(Fp base, std::uint64_t exp, Fp p) {
  Fp result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, p);
    base = mul_mod(base, base, p);
    exp >>= 1;
  }
  return result;
}

Fp inv_mod(Fp a, Fp p) {
  if (a % p == 0) throw InvariantError("inverse of zero");
  return pow_mod(a, p - 2, p);
}

void vandermonde_powers(Fp p, Vertex u, std::size_t len, Fp* out) {
  const Fp x = static_cast<Fp>((static_cast<std::uint64_t>(u) + 1) % p);
  Fp cur = 1 % p;
  for (std::size_t i = 0; i < len; ++i) {
    out[i] = cur;
    cur = mul_mod(cur, x, p);
  }
}

std::vector<Fp> vandermonde_column(std::uint32_t r, Fp p, Vertex u) {
  std::vector<Fp> col(2 * static_cast<std::size_t>(r));
  vandermonde_powers(p, u, col.size(), col.data());
  return col;
}

}  // namespace dcolor
