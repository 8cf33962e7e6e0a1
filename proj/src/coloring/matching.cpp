#include <limits>
#include <queue>

#include "dcolor/coloring.hpp"

namespace dcolor {

std::vector<std::int32_t> maximum_matching(const BipartiteGraph& g) {
  constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::int32_t> ml(g.left, -1), mr(g.right, -1);
  std::vector<std::uint32_t> dist(g.left);

  auto bfs = [&]() {
    std::queue<std::uint32_t> q;
    bool found = false;
    for (std::uint32_t u = 0; u < g.left; ++u) {
      if (ml[u] < 0) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!q.empty()) {
      const std::uint32_t u = q.front();
      q.pop();
      for (std::uint32_t r : g.adj[u]) {
        const std::int32_t w = mr[r];
        if (w < 0) {
          found = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(static_cast<std::uint32_t>(w));
        }
      }
    }
    return found;
  };

  // Iterative layered DFS.
  std::vector<std::size_t> it(g.left);
  auto dfs = [&](std::uint32_t root) {
    std::vector<std::uint32_t> stack{root};
    while (!stack.empty()) {
      const std::uint32_t u = stack.back();
      if (it[u] == g.adj[u].size()) {
        dist[u] = kInf;
        stack.pop_back();
        continue;
      }
      const std::uint32_t r = g.adj[u][it[u]];
      const std::int32_t w = mr[r];
      if (w < 0) {
        // Augment along the stack.
        for (std::size_t i = stack.size(); i-- > 0;) {
          const std::uint32_t x = stack[i];
          const std::uint32_t rx = g.adj[x][it[x]];
          ml[x] = static_cast<std::int32_t>(rx);
          mr[rx] = static_cast<std::int32_t>(x);
        }
        return true;
      }
      if (dist[w] == dist[u] + 1) {
        stack.push_back(static_cast<std::uint32_t>(w));
      } else {
        ++it[u];
      }
    }
    return false;
  };

  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (std::uint32_t u = 0; u < g.left; ++u)
      if (ml[u] < 0) dfs(u);
  }
  return ml;
}

std::optional<std::vector<std::uint32_t>> l_perfect_matching(const BipartiteGraph& g) {
  const auto ml = maximum_matching(g);
  std::vector<std::uint32_t> out(g.left);
  for (std::size_t i = 0; i < g.left; ++i) {
    if (ml[i] < 0) return std::nullopt;
    out[i] = static_cast<std::uint32_t>(ml[i]);
  }
  return out;
}

}  // namespace dcolor
