#include <algorithm>

#include "dcolor/coloring.hpp"

namespace dcolor {

std::size_t PartialColoring::colored_count() const {
  return static_cast<std::size_t>(std::count_if(color_.begin(), color_.end(), [](Color x) { return x != kNoColor; }));
}

void mark_blocked(std::span<const Vertex> vs, const PartialColoring& c, const StoredAdjacency& adj,
                  std::vector<std::uint8_t>& mask) {
  mask.assign(c.delta() + 1, 0);
  for (Vertex v : vs) adj.for_each_neighbor(v, [&](Vertex w) { mask[c[w]] = 1; });
  mask[kNoColor] = 0;
}

std::optional<Edge> monochromatic_edge(const PartialColoring& c, const Graph& g) {
  for (Vertex u = 0; u < g.n(); ++u) {
    if (!c.colored(u)) continue;
    for (Vertex w : g.neighbors(u))
      if (u < w && c[u] == c[w]) return Edge{u, w};
  }
  return std::nullopt;
}

long measure_gap(Vertex v, const PartialColoring& c, const Graph& oracle) {
  std::vector<std::uint8_t> used(c.delta() + 1, 0);
  long uncolored = 0;
  for (Vertex w : oracle.neighbors(v)) {
    if (c.colored(w)) {
      used[c[w]] = 1;
    } else {
      ++uncolored;
    }
  }
  long avail = 0;
  for (Color x = 1; x <= c.delta(); ++x) avail += !used[x];
  return avail - uncolored;
}

}  // namespace dcolor
