#include <algorithm>
#include <queue>

#include "dcolor/coloring.hpp"

namespace dcolor {

namespace {

// BFS order over vertices with alive[v], starting at root.
std::vector<Vertex> bfs_order(const Graph& g, Vertex root, const std::vector<std::uint8_t>& alive) {
  std::vector<Vertex> order{root};
  std::vector<std::uint8_t> seen(g.n(), 0);
  seen[root] = 1;
  for (std::size_t i = 0; i < order.size(); ++i)
    for (Vertex w : g.neighbors(order[i]))
      if (alive[w] && !seen[w]) {
        seen[w] = 1;
        order.push_back(w);
      }
  return order;
}

void greedy(const Graph& g, Vertex v, std::uint32_t delta, std::vector<Color>& col,
            const std::vector<std::uint8_t>& alive, std::vector<std::uint8_t>& used) {
  used.assign(delta + 2, 0);
  for (Vertex w : g.neighbors(v))
    if (alive[w]) used[col[w]] = 1;
  Color c = 1;
  while (c <= delta && used[c]) ++c;
  if (c > delta) throw InvariantError("offline coloring ran out of colors at vertex " + std::to_string(v));
  col[v] = c;
}

// Colors the alive vertices reachable from root in reverse BFS order; the
// root has to have fewer than delta alive neighbors unless pre-colored ones share colors.
void color_from_root(const Graph& g, Vertex root, std::uint32_t delta, std::vector<Color>& col,
                     const std::vector<std::uint8_t>& alive, const std::vector<std::uint8_t>& fixed) {
  std::vector<std::uint8_t> scope = alive;
  auto order = bfs_order(g, root, alive);
  std::vector<std::uint8_t> used;
  for (auto it = order.rbegin(); it != order.rend(); ++it)
    if (!fixed[*it]) greedy(g, *it, delta, col, scope, used);
}

std::size_t alive_degree(const Graph& g, Vertex v, const std::vector<std::uint8_t>& alive) {
  std::size_t d = 0;
  for (Vertex w : g.neighbors(v)) d += alive[w];
  return d;
}

bool connected_without(const Graph& g, std::span<const Vertex> comp, Vertex a, Vertex b,
                       std::vector<std::uint8_t>& alive) {
  alive[a] = alive[b] = 0;
  Vertex start = comp[0] == a || comp[0] == b ? (comp[1] == a || comp[1] == b ? comp[2] : comp[1]) : comp[0];
  const auto order = bfs_order(g, start, alive);
  alive[a] = alive[b] = 1;
  return order.size() + 2 == comp.size();
}

// Articulation point of the component, if any (iterative Tarjan).
std::optional<Vertex> cut_vertex(const Graph& g, Vertex root, const std::vector<std::uint8_t>& alive) {
  const std::size_t n = g.n();
  std::vector<std::uint32_t> disc(n, 0), low(n, 0);
  std::vector<Vertex> parent(n, root);
  std::vector<std::size_t> it(n, 0);
  std::uint32_t timer = 0;
  std::size_t root_children = 0;
  std::vector<Vertex> stack{root};
  disc[root] = low[root] = ++timer;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    auto nb = g.neighbors(v);
    if (it[v] < nb.size()) {
      const Vertex w = nb[it[v]++];
      if (!alive[w]) continue;
      if (disc[w] == 0) {
        parent[w] = v;
        disc[w] = low[w] = ++timer;
        if (v == root) ++root_children;
        stack.push_back(w);
      } else if (w != parent[v]) {
        low[v] = std::min(low[v], disc[w]);
      }
    } else {
      stack.pop_back();
      if (v == root) break;
      const Vertex p = parent[v];
      low[p] = std::min(low[p], low[v]);
      if (p != root && low[v] >= disc[p]) return p;
    }
  }
  if (root_children > 1) return root;
  return std::nullopt;
}

void color_component(const Graph& g, std::span<const Vertex> comp, std::uint32_t delta, std::vector<Color>& col,
                     std::vector<std::uint8_t>& alive) {
  const std::vector<std::uint8_t> none(g.n(), 0);
  if (comp.size() == 1) {
    if (delta == 0) throw InvariantError("no colors available for an isolated vertex with delta = 0");
    col[comp[0]] = 1;
    return;
  }
  for (Vertex v : comp)
    if (alive_degree(g, v, alive) < delta) {
      color_from_root(g, v, delta, col, alive, none);
      return;
    }
  // delta-regular from here on.
  if (comp.size() == static_cast<std::size_t>(delta) + 1)
    throw InvariantError("component is a " + std::to_string(delta + 1) + "-clique");
  if (delta <= 2) {
    if (comp.size() % 2 == 1) throw InvariantError("component is an odd cycle");
    // A cycle of even length: alternate along the cycle.
    Vertex prev = comp[0], cur = g.neighbors(comp[0])[0];
    col[prev] = 1;
    Color next = 2;
    while (cur != comp[0]) {
      col[cur] = next;
      next = 3 - next;
      const auto nb = g.neighbors(cur);
      const Vertex step = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = step;
    }
    return;
  }
  if (auto x = cut_vertex(g, comp[0], alive)) {
    // Each piece of G - x, with x added back, has x at degree < delta.
    alive[*x] = 0;
    std::vector<std::uint8_t> done(g.n(), 0);
    bool first = true;
    Color anchor = 0;
    for (Vertex s : g.neighbors(*x)) {
      if (!alive[s] || done[s]) continue;
      auto piece = bfs_order(g, s, alive);
      std::vector<std::uint8_t> sub(g.n(), 0);
      for (Vertex v : piece) sub[v] = done[v] = 1;
      sub[*x] = 1;
      col[*x] = 0;
      color_from_root(g, *x, delta, col, sub, none);
      if (first) {
        anchor = col[*x];
        first = false;
      } else if (col[*x] != anchor) {
        const Color a = col[*x];
        for (Vertex v : piece) {
          if (col[v] == a) col[v] = anchor;
          else if (col[v] == anchor) col[v] = a;
        }
      }
      col[*x] = anchor;
    }
    alive[*x] = 1;
    return;
  }
  // 2-connected, regular, not complete, delta >= 3.
  for (Vertex v : comp) {
    auto nb = g.neighbors(v);
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex u = nb[i], w = nb[j];
        if (g.has_edge(u, w) || !connected_without(g, comp, u, w, alive)) continue;
        std::vector<std::uint8_t> fixed(g.n(), 0);
        col[u] = col[w] = 1;
        fixed[u] = fixed[w] = 1;
        alive[u] = alive[w] = 0;
        auto order = bfs_order(g, v, alive);
        alive[u] = alive[w] = 1;
        std::vector<std::uint8_t> used;
        for (auto it = order.rbegin(); it != order.rend(); ++it) greedy(g, *it, delta, col, alive, used);
        return;
      }
  }
  throw InvariantError("no Lovasz triple found in a 2-connected regular component");
}

}  // namespace

std::vector<Color> offline_brooks(const Graph& g, std::uint32_t delta) {
  const std::size_t n = g.n();
  std::vector<Color> col(n, kNoColor);
  std::vector<std::uint8_t> alive(n, 1), seen(n, 0);
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    auto comp = bfs_order(g, s, alive);
    for (Vertex v : comp) seen[v] = 1;
    std::sort(comp.begin(), comp.end());
    color_component(g, comp, delta, col, alive);
  }
  return col;
}

}  // namespace dcolor
