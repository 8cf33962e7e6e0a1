#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "dcolor/decomposition.hpp"

namespace dcolor {

namespace {

constexpr double kTol = 1e-9;

struct Dsu {
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0U); }
  std::uint32_t find(std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(std::uint32_t a, std::uint32_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::uint32_t> parent;
};

struct Bounds {
  double lo, hi, slack;
};

Bounds bounds_for(double eps, std::uint32_t delta) {
  return {(1 - 5 * eps) * delta - kTol, (1 + 5 * eps) * delta + kTol, 10 * eps * delta + kTol};
}

std::string list_vertices(std::span<const Vertex> vs) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < vs.size() && i < 12; ++i) os << (i ? "," : "") << vs[i];
  if (vs.size() > 12) os << ",...";
  os << '}';
  return os.str();
}

// Peels the worst offenders of the size and degree bounds until the set complies.
std::optional<std::vector<Vertex>> refine(std::vector<Vertex> k, const Graph& g, const Bounds& b,
                                          std::vector<std::uint8_t>& in_k) {
  for (Vertex v : k) in_k[v] = 1;
  auto cleanup = [&]() {
    for (Vertex v : k) in_k[v] = 0;
  };
  while (true) {
    if (static_cast<double>(k.size()) < b.lo) {
      cleanup();
      return std::nullopt;
    }
    double worst = 0;
    std::size_t worst_i = 0;
    std::size_t most_missing = 0;
    std::size_t most_missing_i = 0;
    for (std::size_t i = 0; i < k.size(); ++i) {
      const Vertex v = k[i];
      std::size_t inside = 0;
      for (Vertex w : g.neighbors(v)) inside += in_k[w];
      const std::size_t missing = k.size() - 1 - inside;
      const std::size_t outside = g.degree(v) - inside;
      const double score = std::max(0.0, missing - b.slack) + std::max(0.0, outside - b.slack);
      if (score > worst) {
        worst = score;
        worst_i = i;
      }
      if (missing > most_missing) {
        most_missing = missing;
        most_missing_i = i;
      }
    }
    std::size_t drop;
    if (worst > 0) {
      drop = worst_i;
    } else if (static_cast<double>(k.size()) > b.hi) {
      drop = most_missing_i;
    } else {
      cleanup();
      return k;
    }
    in_k[k[drop]] = 0;
    k.erase(k.begin() + static_cast<std::ptrdiff_t>(drop));
  }
}

bool complies(std::span<const Vertex> k, const Graph& g, const Bounds& b, std::vector<std::uint8_t>& in_k) {
  if (static_cast<double>(k.size()) < b.lo || static_cast<double>(k.size()) > b.hi) return false;
  for (Vertex v : k) in_k[v] = 1;
  bool ok = true;
  for (Vertex v : k) {
    std::size_t inside = 0;
    for (Vertex w : g.neighbors(v)) inside += in_k[w];
    if (static_cast<double>(k.size() - 1 - inside) > b.slack || static_cast<double>(g.degree(v) - inside) > b.slack) {
      ok = false;
      break;
    }
  }
  for (Vertex v : k) in_k[v] = 0;
  return ok;
}

// Outside vertices that see too much of K (property iv).
std::vector<Vertex> intruders(std::span<const Vertex> k, const Graph& g, const Bounds& b,
                              const std::vector<std::int32_t>& owner, std::int32_t self,
                              std::vector<std::uint32_t>& hits) {
  std::vector<Vertex> touched;
  for (Vertex v : k)
    for (Vertex w : g.neighbors(v)) {
      if (owner[w] == self) continue;
      if (hits[w]++ == 0) touched.push_back(w);
    }
  std::vector<Vertex> out;
  for (Vertex w : touched) {
    if (static_cast<double>(k.size() - hits[w]) < b.slack - 2 * kTol) out.push_back(w);
    hits[w] = 0;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::size_t non_edges_in_neighborhood(Vertex v, const Graph& g) {
  auto nv = g.neighbors(v);
  const std::size_t d = nv.size();
  std::size_t inner = 0;
  for (Vertex u : nv) inner += intersection_size(g.neighbors(u), nv);
  return d * (d - (d > 0 ? 1 : 0)) / 2 - inner / 2;
}

bool is_eps_sparse(Vertex v, const Graph& g, double eps, std::uint32_t delta) {
  const double thr = eps * eps * delta * delta / 2;
  return static_cast<double>(non_edges_in_neighborhood(v, g)) >= std::ceil(thr - kTol);
}

std::size_t count_non_edges(std::span<const Vertex> k, const Graph& g) {
  std::vector<Vertex> sorted(k.begin(), k.end());
  std::sort(sorted.begin(), sorted.end());
  std::size_t inner = 0;
  for (Vertex v : sorted) inner += intersection_size(g.neighbors(v), sorted);
  const std::size_t s = sorted.size();
  return s * (s - (s > 0 ? 1 : 0)) / 2 - inner / 2;
}

Decomposition compute_decomposition(const Graph& g, const ParamSet& params, std::uint32_t delta, bool strict) {
  const std::size_t n = g.n();
  const Bounds b = bounds_for(params.eps, delta);
  const double link = (1 - 10 * params.eps) * delta - kTol;

  Dsu dsu(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex w : g.neighbors(u)) {
      if (w <= u) continue;
      if (static_cast<double>(intersection_size(g.neighbors(u), g.neighbors(w))) >= link) dsu.unite(u, w);
    }

  std::vector<std::vector<Vertex>> groups(n);
  for (Vertex v = 0; v < n; ++v) groups[dsu.find(v)].push_back(v);

  Decomposition dec;
  dec.clique_of.assign(n, -1);
  std::vector<std::uint8_t> in_k(n, 0);
  std::vector<Vertex> pool;
  std::vector<std::int32_t> origin(n, -1);  // group id, for failure reports
  std::vector<std::vector<Vertex>> accepted;

  for (Vertex root = 0; root < n; ++root) {
    auto& grp = groups[root];
    if (grp.empty()) continue;
    for (Vertex v : grp) origin[v] = static_cast<std::int32_t>(root);
    if (grp.size() < 2) {
      pool.push_back(grp[0]);
      continue;
    }
    auto k = refine(grp, g, b, in_k);
    if (!k) {
      pool.insert(pool.end(), grp.begin(), grp.end());
      continue;
    }
    for (Vertex v : grp) in_k[v] = 1;
    for (Vertex v : *k) in_k[v] = 0;
    for (Vertex v : grp)
      if (in_k[v]) {
        pool.push_back(v);
        in_k[v] = 0;
      }
    for (Vertex v : *k) dec.clique_of[v] = static_cast<std::int32_t>(accepted.size());
    accepted.push_back(std::move(*k));
  }

  // Property (iv): absorb an intruder when the enlarged set still complies,
  // otherwise dissolve the clique into the pool.
  std::vector<std::uint32_t> hits(n, 0);
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t ci = 0; ci < accepted.size(); ++ci) {
      auto& k = accepted[ci];
      if (k.empty()) continue;
      auto bad = intruders(k, g, b, dec.clique_of, static_cast<std::int32_t>(ci), hits);
      if (bad.empty()) continue;
      changed = true;
      std::vector<Vertex> grown = k;
      bool absorbable = true;
      for (Vertex w : bad) absorbable = absorbable && dec.clique_of[w] == -1;
      if (absorbable) {
        grown.insert(grown.end(), bad.begin(), bad.end());
        std::sort(grown.begin(), grown.end());
      }
      if (absorbable && complies(grown, g, b, in_k)) {
        for (Vertex w : bad) {
          dec.clique_of[w] = static_cast<std::int32_t>(ci);
          pool.erase(std::remove(pool.begin(), pool.end(), w), pool.end());
        }
        k = std::move(grown);
      } else {
        for (Vertex v : k) {
          dec.clique_of[v] = -1;
          pool.push_back(v);
        }
        k.clear();
      }
    }
  }

  std::vector<std::int32_t> renumber(accepted.size(), -1);
  for (std::size_t ci = 0; ci < accepted.size(); ++ci) {
    if (accepted[ci].empty()) continue;
    renumber[ci] = static_cast<std::int32_t>(dec.cliques.size());
    AlmostClique c;
    c.members = std::move(accepted[ci]);
    c.size_class = classify_size(c.members.size(), delta);
    dec.cliques.push_back(std::move(c));
  }
  for (auto& owner : dec.clique_of)
    if (owner >= 0) owner = renumber[static_cast<std::size_t>(owner)];

  std::sort(pool.begin(), pool.end());
  pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
  for (Vertex v : pool) {
    if (dec.clique_of[v] >= 0) continue;
    if (strict && !is_eps_sparse(v, g, params.eps, delta)) {
      std::vector<Vertex> cluster = groups[static_cast<std::size_t>(origin[v])];
      if (cluster.empty()) cluster = {v};
      throw DecompositionFailed("vertex " + std::to_string(v) +
                                    " is neither eps-sparse nor in a valid almost-clique; cluster " +
                                    list_vertices(cluster),
                                cluster);
    }
    dec.sparse.push_back(v);
  }
  return dec;
}

Graph heuristic_oracle(const DecompSamples& s, const Graph& h) {
  Graph g(h.n());
  for (const Edge& e : h.edges()) g.add_edge(e.u, e.v);
  for (Vertex v = 0; v < s.n_sample.size(); ++v) {
    for (Vertex w : s.sample_nbhd[v]) g.add_edge(v, w);
    for (Vertex w : s.n_sample[v]) g.add_edge(v, w);
    for (Vertex w : s.i_sample[v]) g.add_edge(v, w);
  }
  g.finalize();
  return g;
}

std::vector<Violation> verify_decomposition(const Decomposition& dec, const Graph& g, double eps,
                                            std::uint32_t delta) {
  std::vector<Violation> out;
  const Bounds b = bounds_for(eps, delta);
  const std::size_t n = g.n();
  std::vector<std::int32_t> owner(n, -2);
  for (Vertex v : dec.sparse) {
    if (owner[v] != -2) out.push_back({-1, v, "partition", "vertex listed twice"});
    owner[v] = -1;
  }
  for (std::size_t ci = 0; ci < dec.cliques.size(); ++ci)
    for (Vertex v : dec.cliques[ci].members) {
      if (owner[v] != -2) out.push_back({static_cast<std::int32_t>(ci), v, "partition", "vertex listed twice"});
      owner[v] = static_cast<std::int32_t>(ci);
    }
  for (Vertex v = 0; v < n; ++v)
    if (owner[v] == -2) out.push_back({-1, v, "partition", "vertex missing from the partition"});

  std::vector<std::uint8_t> in_k(n, 0);
  std::vector<std::uint32_t> hits(n, 0);
  for (std::size_t ci = 0; ci < dec.cliques.size(); ++ci) {
    const auto& k = dec.cliques[ci].members;
    const auto id = static_cast<std::int32_t>(ci);
    const double size = static_cast<double>(k.size());
    if (size < b.lo || size > b.hi) {
      out.push_back({id, k.empty() ? 0 : k[0], "i", "size " + std::to_string(k.size()) + " outside [(1-5eps)D, (1+5eps)D]"});
    }
    for (Vertex v : k) in_k[v] = 1;
    for (Vertex v : k) {
      std::size_t inside = 0;
      for (Vertex w : g.neighbors(v)) inside += in_k[w];
      const std::size_t missing = k.size() - 1 - inside;
      const std::size_t outside = g.degree(v) - inside;
      if (static_cast<double>(missing) > b.slack)
        out.push_back({id, v, "ii", std::to_string(missing) + " non-neighbors inside"});
      if (static_cast<double>(outside) > b.slack)
        out.push_back({id, v, "iii", std::to_string(outside) + " neighbors outside"});
    }
    for (Vertex v : k) in_k[v] = 0;
    for (Vertex v : k)
      for (Vertex w : g.neighbors(v)) ++hits[w];
    for (Vertex u = 0; u < n; ++u) {
      if (owner[u] == id) {
        hits[u] = 0;
        continue;
      }
      const std::size_t non_nbrs = k.size() - hits[u];
      if (static_cast<double>(non_nbrs) < b.slack - 2 * kTol)
        out.push_back({id, u, "iv", "outside vertex has only " + std::to_string(non_nbrs) + " non-neighbors in K"});
      hits[u] = 0;
    }
  }
  for (Vertex v : dec.sparse)
    if (!is_eps_sparse(v, g, eps, delta)) out.push_back({-1, v, "sparse", "vertex is not eps-sparse"});
  return out;
}

}  // namespace dcolor
