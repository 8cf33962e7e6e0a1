#pragma once
// Brute-force graph facts for small instances (adjacency as bitmasks).

#include <bit>
#include <cstdint>
#include <vector>

namespace oracle {

struct SmallGraph {
  int n = 0;
  std::vector<std::uint32_t> adj;  // bit j of adj[i]: edge i-j

  explicit SmallGraph(int n_) : n(n_), adj(static_cast<std::size_t>(n_), 0) {}
  void add(int u, int v) {
    adj[u] |= 1U << v;
    adj[v] |= 1U << u;
  }
  int degree(int v) const { return std::popcount(adj[v]); }
  int max_degree() const {
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, degree(v));
    return d;
  }
  int edges() const {
    int e = 0;
    for (int v = 0; v < n; ++v) e += degree(v);
    return e / 2;
  }
};

inline bool connected(const SmallGraph& g) {
  if (g.n == 0) return true;
  std::uint32_t seen = 1, frontier = 1;
  while (frontier) {
    std::uint32_t next = 0;
    for (int v = 0; v < g.n; ++v)
      if (frontier >> v & 1) next |= g.adj[v];
    frontier = next & ~seen;
    seen |= next;
  }
  return seen == (g.n == 32 ? ~0U : (1U << g.n) - 1);
}

inline bool is_complete(const SmallGraph& g) { return g.edges() == g.n * (g.n - 1) / 2; }

inline bool is_odd_cycle(const SmallGraph& g) {
  if (g.n < 3 || g.n % 2 == 0 || g.edges() != g.n) return false;
  for (int v = 0; v < g.n; ++v)
    if (g.degree(v) != 2) return false;
  return connected(g);
}

// Backtracking k-colorability.
inline bool colorable(const SmallGraph& g, int k) {
  std::vector<int> col(static_cast<std::size_t>(g.n), 0);
  auto go = [&](auto&& self, int v) -> bool {
    if (v == g.n) return true;
    for (int c = 1; c <= k; ++c) {
      bool ok = true;
      for (int w = 0; w < v && ok; ++w)
        if ((g.adj[v] >> w & 1) && col[w] == c) ok = false;
      if (!ok) continue;
      col[v] = c;
      if (self(self, v + 1)) return true;
    }
    col[v] = 0;
    return false;
  };
  return go(go, 0);
}

// Hall's condition |N(A)| >= |A| for every subset A of the left side.
inline bool hall_holds(const std::vector<std::uint32_t>& left_adj) {
  const std::size_t l = left_adj.size();
  std::vector<std::uint32_t> nb(std::size_t{1} << l, 0);
  for (std::uint32_t a = 1; a < (1U << l); ++a) {
    const int low = std::countr_zero(a);
    nb[a] = nb[a & (a - 1)] | left_adj[static_cast<std::size_t>(low)];
    if (std::popcount(nb[a]) < std::popcount(a)) return false;
  }
  return true;
}

}  // namespace oracle
