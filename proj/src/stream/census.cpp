#include <numeric>
#include <sstream>

#include "dcolor/stream.hpp"

namespace dcolor {

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n), size(n, 1) { std::iota(parent.begin(), parent.end(), 0U); }

  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }

  std::vector<std::uint32_t> parent;
  std::vector<std::uint32_t> size;
};

}  // namespace

Census run_census(EdgeStream& stream, std::uint64_t seed, Graph* shadow) {
  const std::size_t n = stream.n();
  Census census;
  census.meta.n = n;
  census.meta.seed = seed;
  census.degree.assign(n, 0);
  DisjointSets dsu(n);
  std::vector<std::pair<Vertex, Vertex>> edge_roots;
  if (shadow != nullptr) *shadow = Graph(n);
  std::size_t m = 0;
  while (auto e = stream.next()) {
    ++census.degree[e->u];
    ++census.degree[e->v];
    dsu.unite(e->u, e->v);
    if (shadow != nullptr) shadow->add_edge(e->u, e->v);
    edge_roots.emplace_back(e->u, e->v);
    ++m;
  }
  if (shadow != nullptr) shadow->finalize();
  census.meta.m = m;
  std::uint32_t delta = 0;
  for (auto d : census.degree) delta = std::max(delta, d);
  census.meta.delta = delta;

  auto& cc = census.components;
  cc.component_of.assign(n, UINT32_MAX);
  std::vector<std::uint32_t> index_of_root(n, UINT32_MAX);
  for (Vertex v = 0; v < n; ++v) {
    std::uint32_t r = dsu.find(v);
    if (index_of_root[r] == UINT32_MAX) {
      index_of_root[r] = static_cast<std::uint32_t>(cc.components.size());
      ComponentStats stats;
      stats.min_degree = census.degree[v];
      cc.components.push_back(std::move(stats));
    }
    std::uint32_t idx = index_of_root[r];
    cc.component_of[v] = idx;
    auto& stats = cc.components[idx];
    stats.members.push_back(v);
    stats.max_degree = std::max(stats.max_degree, census.degree[v]);
    stats.min_degree = std::min(stats.min_degree, census.degree[v]);
  }
  for (auto [u, v] : edge_roots) {
    (void)v;
    ++cc.components[cc.component_of[u]].ecount;
  }
  return census;
}

std::pair<DegreeTable, StreamMeta> degree_census(EdgeStream& stream) {
  Census c = run_census(stream);
  return {std::move(c.degree), c.meta};
}

Graph shadow_copy(EdgeStream& stream) {
  Graph g(stream.n());
  while (auto e = stream.next()) g.add_edge(e->u, e->v);
  g.finalize();
  return g;
}

std::vector<ComponentVerdict> check_colorability(const Census& census, std::uint32_t delta) {
  std::vector<ComponentVerdict> out;
  out.reserve(census.components.components.size());
  for (std::size_t i = 0; i < census.components.components.size(); ++i) {
    const auto& c = census.components.components[i];
    if (c.max_degree > delta) {
      throw InvariantError("component max degree " + std::to_string(c.max_degree) + " exceeds delta " +
                           std::to_string(delta));
    }
    const std::size_t vc = c.members.size();
    Colorability verdict = Colorability::kColorable;
    if (vc == static_cast<std::size_t>(delta) + 1 &&
        c.ecount == static_cast<std::size_t>(delta) * (delta + 1) / 2 && c.min_degree == delta &&
        c.max_degree == delta) {
      verdict = Colorability::kCliqueComponent;
    } else if (delta == 2 && c.min_degree == 2 && c.max_degree == 2 && vc % 2 == 1 && c.ecount == vc) {
      verdict = Colorability::kOddCycleComponent;
    }
    out.push_back({i, verdict});
  }
  return out;
}

namespace {

std::string describe_members(const std::vector<Vertex>& members) {
  std::ostringstream os;
  os << '{';
  bool contiguous = members.size() > 2;
  for (std::size_t i = 1; contiguous && i < members.size(); ++i) contiguous = members[i] == members[i - 1] + 1;
  if (contiguous) {
    os << members.front() << ".." << members.back();
  } else {
    for (std::size_t i = 0; i < members.size(); ++i) os << (i ? "," : "") << members[i];
  }
  os << '}';
  return os.str();
}

}  // namespace

std::optional<std::string> colorability_failure(const Census& census, std::uint32_t delta) {
  for (const auto& v : check_colorability(census, delta)) {
    if (v.verdict == Colorability::kColorable) continue;
    const auto& c = census.components.components[v.component];
    std::ostringstream os;
    os << "not \u0394-colorable: component " << describe_members(c.members);
    if (v.verdict == Colorability::kCliqueComponent) {
      os << " is a " << c.members.size() << "-clique";
    } else {
      os << " is an odd cycle of length " << c.members.size();
    }
    os << " (\u0394=" << delta << ")";
    return os.str();
  }
  return std::nullopt;
}

}  // namespace dcolor
