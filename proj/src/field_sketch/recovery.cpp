#include <algorithm>

#include "dcolor/rng.hpp"
#include "dcolor/simd/kernels.hpp"
#include "dcolor/sketch.hpp"

namespace dcolor {

void RandomMatrix::column(Vertex u, Fp* out) const {
  for (std::uint32_t i = 0; i < rows_; ++i) {
    out[i] = static_cast<Fp>(hash_mix(seed_, u, i) % p_);
  }
}

std::vector<Fp> RandomMatrix::apply(const SparseVector& x) const {
  std::vector<Fp> acc(rows_, 0);
  std::vector<Fp> col(rows_);
  for (auto [j, val] : x.entries) {
    column(j, col.data());
    for (std::uint32_t i = 0; i < rows_; ++i) acc[i] = add_mod(acc[i], mul_mod(col[i], val, p_), p_);
  }
  return acc;
}

std::vector<Fp> berlekamp_massey(std::span<const Fp> s, Fp p) {
  std::vector<Fp> c{1}, b{1};
  std::size_t len = 0;
  std::size_t shift = 1;
  Fp last = 1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    Fp d = s[i];
    for (std::size_t j = 1; j <= len && j < c.size(); ++j) d = add_mod(d, mul_mod(c[j], s[i - j], p), p);
    if (d == 0) {
      ++shift;
      continue;
    }
    const Fp coef = mul_mod(d, inv_mod(last, p), p);
    std::vector<Fp> prev = c;
    if (c.size() < b.size() + shift) c.resize(b.size() + shift, 0);
    for (std::size_t j = 0; j < b.size(); ++j) c[j + shift] = sub_mod(c[j + shift], mul_mod(coef, b[j], p), p);
    if (2 * len <= i) {
      len = i + 1 - len;
      b = std::move(prev);
      last = d;
      shift = 1;
    } else {
      ++shift;
    }
  }
  c.resize(len + 1, 0);
  return c;
}

namespace {

// Solves A x = rhs for square A over F_p; false if singular.
bool solve_linear(std::vector<std::vector<Fp>>& a, std::vector<Fp>& rhs, Fp p) {
  const std::size_t n = rhs.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) return false;
    std::swap(a[piv], a[col]);
    std::swap(rhs[piv], rhs[col]);
    const Fp inv = inv_mod(a[col][col], p);
    for (std::size_t j = col; j < n; ++j) a[col][j] = mul_mod(a[col][j], inv, p);
    rhs[col] = mul_mod(rhs[col], inv, p);
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || a[row][col] == 0) continue;
      const Fp f = a[row][col];
      for (std::size_t j = col; j < n; ++j) a[row][j] = sub_mod(a[row][j], mul_mod(f, a[col][j], p), p);
      rhs[row] = sub_mod(rhs[row], mul_mod(f, rhs[col], p), p);
    }
  }
  return true;
}

}  // namespace

std::vector<Fp> syndromes(const SparseVector& x, std::uint32_t r, Fp p) {
  std::vector<Fp> out(2 * static_cast<std::size_t>(r), 0);
  for (auto [j, val] : x.entries) {
    const Fp base = static_cast<Fp>((static_cast<std::uint64_t>(j) + 1) % p);
    Fp cur = val;
    for (auto& s : out) {
      s = add_mod(s, cur, p);
      cur = mul_mod(cur, base, p);
    }
  }
  return out;
}

std::optional<SparseVector> recover_sparse(std::span<const Fp> meas, std::uint32_t r, Fp p, std::size_t n) {
  if (meas.size() != 2 * static_cast<std::size_t>(r)) throw InvariantError("measurement length must be 2r");
  SparseVector out;
  if (std::all_of(meas.begin(), meas.end(), [](Fp v) { return v == 0; })) return out;

  const std::vector<Fp> c = berlekamp_massey(meas, p);
  const std::size_t len = c.size() - 1;
  if (len == 0 || len > r || c[len] == 0) return std::nullopt;

  // Roots of z^L + c1 z^(L-1) + ... + cL are the column locators j+1.
  std::vector<Vertex> support;
  for (std::size_t col = 1; col <= n && col < p; ++col) {
    const Fp x = static_cast<Fp>(col);
    Fp acc = 1;
    for (std::size_t i = 1; i <= len; ++i) acc = add_mod(mul_mod(acc, x, p), c[i], p);
    if (acc == 0) {
      support.push_back(static_cast<Vertex>(col - 1));
      if (support.size() > len) return std::nullopt;
    }
  }
  if (support.size() != len) return std::nullopt;

  std::vector<std::vector<Fp>> a(len, std::vector<Fp>(len));
  std::vector<Fp> rhs(meas.begin(), meas.begin() + static_cast<std::ptrdiff_t>(len));
  for (std::size_t j = 0; j < len; ++j) {
    const Fp base = support[j] + 1;
    Fp cur = 1;
    for (std::size_t i = 0; i < len; ++i) {
      a[i][j] = cur;
      cur = mul_mod(cur, base, p);
    }
  }
  if (!solve_linear(a, rhs, p)) return std::nullopt;
  for (std::size_t j = 0; j < len; ++j) {
    if (rhs[j] == 0) return std::nullopt;
    out.entries.emplace_back(support[j], rhs[j]);
  }
  const std::vector<Fp> check = syndromes(out, r, p);
  if (!std::equal(check.begin(), check.end(), meas.begin())) return std::nullopt;
  return out;
}

bool verify_candidate(std::span<const Fp> check, const RandomMatrix& phi, const SparseVector& x) {
  if (check.size() != phi.rows()) throw InvariantError("check vector length must equal rows of Φ^R");
  const std::vector<Fp> got = phi.apply(x);
  return std::equal(got.begin(), got.end(), check.begin());
}

std::optional<SparseVector> safe_recover(const Measurement& meas, Fp p, std::size_t n, const RandomMatrix& phi) {
  auto x = recover_sparse(meas.y, meas.r, p, n);
  if (!x) return std::nullopt;
  if (!verify_candidate(meas.z, phi, *x)) return std::nullopt;
  return x;
}

}  // namespace dcolor
