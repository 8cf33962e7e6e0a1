#pragma once
// Independent arithmetic for test oracles: plain 64-bit modular math, no
// shared code with the library's field or decoder.

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace oracle {

using u64 = std::uint64_t;

inline u64 pw(u64 b, u64 e, u64 p) {
  u64 r = 1 % p;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

inline u64 inv(u64 a, u64 p) { return pw(a, p - 2, p); }

// s_i = sum_j x_j (j+1)^i for i < len.
inline std::vector<u64> syndromes(const std::vector<std::pair<u64, u64>>& x, std::size_t len, u64 p) {
  std::vector<u64> s(len, 0);
  for (auto [j, v] : x) {
    u64 node = (j + 1) % p, powv = 1;
    for (std::size_t i = 0; i < len; ++i) {
      s[i] = (s[i] + v * powv) % p;
      powv = powv * node % p;
    }
  }
  return s;
}

// Solves A x = b (square) by Gauss-Jordan; nullopt when singular.
inline std::optional<std::vector<u64>> solve(std::vector<std::vector<u64>> a, std::vector<u64> b, u64 p) {
  const std::size_t m = b.size();
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    while (piv < m && a[piv][c] == 0) ++piv;
    if (piv == m) return std::nullopt;
    std::swap(a[piv], a[c]);
    std::swap(b[piv], b[c]);
    const u64 iv = inv(a[c][c], p);
    for (std::size_t k = 0; k < m; ++k) a[c][k] = a[c][k] * iv % p;
    b[c] = b[c] * iv % p;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == c || a[r][c] == 0) continue;
      const u64 f = a[r][c];
      for (std::size_t k = 0; k < m; ++k) a[r][k] = (a[r][k] + p - f * a[c][k] % p) % p;
      b[r] = (b[r] + p - f * b[c] % p) % p;
    }
  }
  return b;
}

// Every vector with at most k nonzeros over columns 0..n-1 whose first
// y.size() syndromes equal y, found by enumerating supports.
inline std::vector<std::vector<std::pair<u64, u64>>> brute_force_recover(const std::vector<u64>& y, std::size_t k,
                                                                         u64 p, std::size_t n) {
  std::vector<std::vector<std::pair<u64, u64>>> out;
  bool zero = true;
  for (u64 v : y) zero = zero && v == 0;
  if (zero) out.push_back({});
  std::vector<std::size_t> sup;
  auto visit = [&](auto&& self, std::size_t start) -> void {
    if (!sup.empty()) {
      const std::size_t s = sup.size();
      std::vector<std::vector<u64>> a(s, std::vector<u64>(s));
      std::vector<u64> b(y.begin(), y.begin() + static_cast<std::ptrdiff_t>(s));
      for (std::size_t i = 0; i < s; ++i)
        for (std::size_t j = 0; j < s; ++j) a[i][j] = pw(sup[j] + 1, i, p);
      if (auto sol = solve(a, b, p)) {
        bool full = true;
        for (u64 v : *sol) full = full && v != 0;
        if (full) {
          std::vector<std::pair<u64, u64>> x;
          for (std::size_t j = 0; j < s; ++j) x.emplace_back(sup[j], (*sol)[j]);
          if (syndromes(x, y.size(), p) == y) out.push_back(x);
        }
      }
    }
    if (sup.size() == k) return;
    for (std::size_t c = start; c < n; ++c) {
      sup.push_back(c);
      self(self, c + 1);
      sup.pop_back();
    }
  };
  visit(visit, 0);
  return out;
}

// A nonzero vector on `cols` (size 2r+1) in the kernel of the 2r-row
// Vandermonde map.
inline std::vector<std::pair<u64, u64>> kernel_vector(const std::vector<u64>& cols, std::size_t r, u64 p) {
  const std::size_t m = 2 * r;
  // Fix the last coordinate to 1 and solve the square system for the rest.
  std::vector<std::vector<u64>> a(m, std::vector<u64>(m));
  std::vector<u64> b(m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) a[i][j] = pw(cols[j] + 1, i, p);
    b[i] = (p - pw(cols[m] + 1, i, p)) % p;
  }
  auto sol = solve(a, b, p);
  std::vector<std::pair<u64, u64>> x;
  for (std::size_t j = 0; j < m; ++j) x.emplace_back(cols[j], (*sol)[j]);
  x.emplace_back(cols[m], 1);
  return x;
}

}  // namespace oracle
