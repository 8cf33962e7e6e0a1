#include "dcolor/helpers.hpp"

#include <algorithm>

namespace dcolor {

std::optional<std::vector<Vertex>> recover_neighborhood(const SketchBank& bank, std::size_t k, Vertex w,
                                                        std::span<const Vertex> clique,
                                                        std::span<const Fp> phi_v_k,
                                                        std::span<const Fp> phi_r_k) {
  if (!bank.sampled(k, w)) return std::nullopt;
  const Measurement m = bank.measure_relative(w, k, phi_v_k, phi_r_k);
  const auto x = bank.recover(m, k);
  if (!x) return std::nullopt;
  const Fp minus_one = bank.p() - 1;
  std::vector<Vertex> add, remove;
  for (const auto& [idx, val] : x->entries) {
    const bool in_k = std::binary_search(clique.begin(), clique.end(), idx);
    if (val == 1 && !in_k) {
      add.push_back(idx);
    } else if (val == minus_one && in_k) {
      remove.push_back(idx);
    } else {
      return std::nullopt;
    }
  }
  // w is never its own neighbor.
  if (!std::binary_search(remove.begin(), remove.end(), w)) return std::nullopt;
  std::vector<Vertex> inside;
  std::set_difference(clique.begin(), clique.end(), remove.begin(), remove.end(), std::back_inserter(inside));
  std::vector<Vertex> out;
  std::merge(inside.begin(), inside.end(), add.begin(), add.end(), std::back_inserter(out));
  return out;
}

std::optional<CriticalHelper> find_critical_helper(std::span<const Vertex> clique, const SketchBank& bank,
                                                   const Graph& stored) {
  for (std::size_t k = 0; k < bank.rate_count(); ++k) {
    const auto pv = bank.phi_v_of_set(k, clique);
    const auto pr = bank.phi_r_of_set(k, clique);
    for (Vertex w : clique) {
      auto nw = recover_neighborhood(bank, k, w, clique, pv, pr);
      if (!nw) continue;
      std::optional<Vertex> best;
      std::size_t best_deg = 0;
      for (Vertex u : clique) {
        if (u == w || std::binary_search(nw->begin(), nw->end(), u)) continue;
        const std::size_t inside = intersection_size(stored.neighbors(u), clique);
        const std::size_t non_deg = clique.size() - 1 - inside;
        if (!best || non_deg > best_deg) {
          best = u;
          best_deg = non_deg;
        }
      }
      if (!best) continue;
      return CriticalHelper{*best, w, std::move(*nw), bank.rate(k)};
    }
  }
  return std::nullopt;
}

std::optional<FriendlyHelper> find_friendly_helper(std::span<const Vertex> clique, Vertex u,
                                                   const SketchBank& bank) {
  const std::size_t k = bank.rate_count() - 1;
  const auto pv = bank.phi_v_of_set(k, clique);
  const auto pr = bank.phi_r_of_set(k, clique);
  std::vector<std::optional<std::vector<Vertex>>> memo(clique.size());
  std::vector<std::uint8_t> tried(clique.size(), 0);
  auto nbhd = [&](std::size_t i) -> const std::optional<std::vector<Vertex>>& {
    if (!tried[i]) {
      tried[i] = 1;
      memo[i] = recover_neighborhood(bank, k, clique[i], clique, pv, pr);
    }
    return memo[i];
  };
  for (std::size_t wi = 0; wi < clique.size(); ++wi) {
    const auto& nw = nbhd(wi);
    if (!nw || std::binary_search(nw->begin(), nw->end(), u)) continue;
    for (std::size_t vi = 0; vi < clique.size(); ++vi) {
      if (vi == wi || !std::binary_search(nw->begin(), nw->end(), clique[vi])) continue;
      const auto& nv = nbhd(vi);
      if (!nv || !std::binary_search(nv->begin(), nv->end(), u)) continue;
      return FriendlyHelper{u, clique[vi], clique[wi], *nv, *nw};
    }
  }
  return std::nullopt;
}

HelperSet find_helpers(const Decomposition& dec, const SketchBank& bank, const Graph& stored) {
  HelperSet hs;
  hs.critical.resize(dec.cliques.size());
  hs.friendly.resize(dec.cliques.size());
  for (std::size_t i = 0; i < dec.cliques.size(); ++i) {
    const auto& c = dec.cliques[i];
    if (c.size_class == SizeClass::kCritical) hs.critical[i] = find_critical_helper(c.members, bank, stored);
    if (c.friendly && c.witness) hs.friendly[i] = find_friendly_helper(c.members, *c.witness, bank);
  }
  return hs;
}

namespace {

template <class F>
void for_each_star(const HelperSet& hs, F&& f) {
  for (const auto& h : hs.critical)
    if (h) f(h->v, h->nv);
  for (const auto& h : hs.friendly)
    if (h) {
      f(h->v, h->nv);
      f(h->w, h->nw);
    }
}

}  // namespace

Graph build_recovery_graph(std::size_t n, const HelperSet& helpers) {
  Graph g(n);
  for_each_star(helpers, [&](Vertex x, const std::vector<Vertex>& nx) {
    for (Vertex y : nx) g.add_edge(x, y);
  });
  g.finalize();
  return g;
}

std::vector<std::uint8_t> recovered_vertices(std::size_t n, const HelperSet& helpers) {
  std::vector<std::uint8_t> out(n, 0);
  for_each_star(helpers, [&](Vertex x, const std::vector<Vertex>&) { out[x] = 1; });
  return out;
}

}  // namespace dcolor
