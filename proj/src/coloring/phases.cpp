#include <algorithm>

#include "dcolor/coloring.hpp"
#include "dcolor/rng.hpp"

namespace dcolor {

PartialColoring one_shot(const Graph& h, const PaletteSet& pal, std::uint32_t alpha, std::uint64_t seed) {
  const std::size_t n = h.n();
  PartialColoring c(n, pal.delta);
  const std::uint64_t aseed = derive_seed(seed, SeedTag::kActivation);
  const double prob = 1.0 / std::max(alpha, 1U);
  std::vector<std::uint8_t> active(n, 0);
  for (Vertex v = 0; v < n; ++v) active[v] = to_unit(hash_mix(aseed, v)) < prob;
  for (Vertex v = 0; v < n; ++v) {
    if (!active[v]) continue;
    bool keep = true;
    for (Vertex w : h.neighbors(v))
      if (active[w] && pal.l1[w] == pal.l1[v]) {
        keep = false;
        break;
      }
    if (keep) c.set(v, pal.l1[v], PhaseTag::kOneShot);
  }
  return c;
}

bool color_clique_by_matching(std::span<const Vertex> k, PartialColoring& c, const std::vector<ColorList>& s,
                              const StoredAdjacency& adj, PhaseTag tag, std::span<const Color> excluded) {
  const std::uint32_t delta = c.delta();
  std::vector<std::uint8_t> off(delta + 1, 0);
  for (Color x : excluded) off[x] = 1;
  std::vector<Vertex> left;
  for (Vertex v : k) {
    if (c.colored(v)) {
      off[c[v]] = 1;
    } else {
      left.push_back(v);
    }
  }
  if (left.empty()) return true;
  std::vector<std::int32_t> right_id(delta + 1, -1);
  std::vector<Color> right;
  for (Color x = 1; x <= delta; ++x)
    if (!off[x]) {
      right_id[x] = static_cast<std::int32_t>(right.size());
      right.push_back(x);
    }
  if (left.size() > right.size()) return false;
  BipartiteGraph bg(left.size(), right.size());
  std::vector<std::uint8_t> blocked;
  for (std::size_t i = 0; i < left.size(); ++i) {
    const Vertex v = left[i];
    mark_blocked(std::span<const Vertex>(&v, 1), c, adj, blocked);
    for (Color x : s[v])
      if (right_id[x] >= 0 && !blocked[x]) bg.adj[i].push_back(static_cast<std::uint32_t>(right_id[x]));
  }
  const auto m = l_perfect_matching(bg);
  if (!m) return false;
  for (std::size_t i = 0; i < left.size(); ++i) c.set(left[i], right[(*m)[i]], tag);
  return true;
}

std::optional<Vertex> greedy_sparse(PartialColoring& c, std::span<const Vertex> vs, const PaletteSet& pal,
                                    const StoredAdjacency& adj) {
  std::vector<std::uint8_t> blocked;
  for (Vertex v : vs) {
    if (c.colored(v)) continue;
    mark_blocked(std::span<const Vertex>(&v, 1), c, adj, blocked);
    auto it = std::find_if(pal.l3[v].begin(), pal.l3[v].end(), [&](Color x) { return !blocked[x]; });
    if (it == pal.l3[v].end()) return v;
    c.set(v, *it, PhaseTag::kSparse);
  }
  return std::nullopt;
}

void strip_residue(PartialColoring& c, const std::vector<std::uint8_t>& keep) {
  for (Vertex v = 0; v < c.n(); ++v)
    if (!keep[v]) c.clear(v);
}

std::vector<Edge> stored_non_edges(std::span<const Vertex> k, const StoredAdjacency& adj) {
  std::vector<Edge> out;
  std::vector<Vertex> nb;
  for (std::size_t i = 0; i < k.size(); ++i) {
    nb.clear();
    adj.for_each_neighbor(k[i], [&](Vertex w) { nb.push_back(w); });
    std::sort(nb.begin(), nb.end());
    for (std::size_t j = i + 1; j < k.size(); ++j)
      if (!std::binary_search(nb.begin(), nb.end(), k[j])) out.push_back({k[i], k[j]});
  }
  return out;
}

std::vector<ColorfulPair> colorful_matching(std::span<const Edge> non_edges, const PartialColoring& c,
                                            const std::vector<ColorList>& list, const StoredAdjacency& adj) {
  std::vector<ColorfulPair> m;
  std::vector<std::uint8_t> dead(non_edges.size(), 0);
  std::vector<Vertex> matched;
  std::vector<std::uint8_t> blocked;
  auto in_list = [&](Vertex v, Color x) { return std::binary_search(list[v].begin(), list[v].end(), x); };
  for (Color x = 1; x <= c.delta(); ++x) {
    for (std::size_t i = 0; i < non_edges.size(); ++i) {
      if (dead[i]) continue;
      const Edge e = non_edges[i];
      if (c.colored(e.u) || c.colored(e.v) || !in_list(e.u, x) || !in_list(e.v, x)) continue;
      const Vertex pair[2] = {e.u, e.v};
      mark_blocked(pair, c, adj, blocked);
      if (blocked[x]) continue;
      m.push_back({e.u, e.v, x});
      for (std::size_t j = 0; j < non_edges.size(); ++j) {
        const Edge f = non_edges[j];
        if (f.u == e.u || f.u == e.v || f.v == e.u || f.v == e.v) dead[j] = 1;
      }
      break;
    }
  }
  return m;
}

namespace {

struct Snapshot {
  std::vector<std::pair<Vertex, Color>> colors;
  std::vector<PhaseTag> tags;

  Snapshot(std::span<const Vertex> vs, const PartialColoring& c) {
    for (Vertex v : vs) {
      colors.emplace_back(v, c[v]);
      tags.push_back(c.tag(v));
    }
  }
  void restore(PartialColoring& c) const {
    for (std::size_t i = 0; i < colors.size(); ++i) {
      if (colors[i].second == kNoColor) {
        c.clear(colors[i].first);
      } else {
        c.set(colors[i].first, colors[i].second, tags[i]);
      }
    }
  }
};

}  // namespace

Phase4Outcome phase4_color(std::span<const Vertex> k, PartialColoring& c, const PaletteSet& pal,
                           const StoredAdjacency& adj) {
  Phase4Outcome out;
  if (std::all_of(k.begin(), k.end(), [&](Vertex v) { return c.colored(v); })) {
    out.colored = true;
    return out;
  }
  const auto f = stored_non_edges(k, adj);
  std::vector<ColorfulPair> best;
  for (std::size_t i = 0; i < pal.l4.size(); ++i) {
    auto m = colorful_matching(f, c, pal.l4[i], adj);
    if (m.size() > best.size()) {
      best = std::move(m);
      out.best_list = i;
    }
  }
  out.best_matching = best.size();
  const Snapshot snap(k, c);
  for (const auto& pr : best) {
    c.set(pr.u, pr.color, PhaseTag::kHoley);
    c.set(pr.v, pr.color, PhaseTag::kHoley);
  }
  out.colored = color_clique_by_matching(k, c, pal.l4star, adj, PhaseTag::kHoley);
  if (!out.colored) snap.restore(c);
  return out;
}

std::optional<std::string> phase5_critical(std::span<const Vertex> k, const CriticalHelper& helper,
                                           PartialColoring& c, const PaletteSet& pal, const StoredAdjacency& adj) {
  const Vertex pair[2] = {helper.u, helper.v};
  std::vector<std::uint8_t> blocked;
  mark_blocked(pair, c, adj, blocked);
  const auto& lu = pal.l5[helper.u];
  auto it = std::find_if(lu.begin(), lu.end(), [&](Color x) { return !blocked[x]; });
  if (it == lu.end()) return std::string("no good color for the helper pair");
  const Snapshot snap(k, c);
  c.set(helper.u, *it, PhaseTag::kCritical);
  c.set(helper.v, *it, PhaseTag::kCritical);
  if (!color_clique_by_matching(k, c, pal.l5, adj, PhaseTag::kCritical)) {
    snap.restore(c);
    return std::string("no L-perfect matching for the rest of the clique");
  }
  return std::nullopt;
}

std::optional<std::string> phase6_friendly(std::span<const Vertex> k, const FriendlyHelper& helper,
                                           PartialColoring& c, const PaletteSet& pal, const StoredAdjacency& adj) {
  const std::size_t last = pal.l6.size() - 1;
  const std::uint32_t iu = c.recolor_count(helper.u);
  if (iu >= last) return std::string("recoloring lists of the witness exhausted");
  const Vertex pair[2] = {helper.u, helper.w};
  std::vector<std::uint8_t> blocked;
  mark_blocked(pair, c, adj, blocked);
  const auto& lu = pal.l6[iu][helper.u];
  auto it = std::find_if(lu.begin(), lu.end(), [&](Color x) { return !blocked[x]; });
  if (it == lu.end()) return std::string("no good color in the witness's recoloring list");
  const Color x = *it;

  std::vector<Vertex> touched(k.begin(), k.end());
  touched.push_back(helper.u);
  const Snapshot snap(touched, c);
  c.set(helper.u, x, PhaseTag::kFriendly);
  c.set(helper.w, x, PhaseTag::kFriendly);
  c.bump_recolor(helper.u);

  std::vector<Vertex> rest;
  for (Vertex y : k)
    if (y != helper.v) rest.push_back(y);
  if (!color_clique_by_matching(rest, c, pal.l6[last], adj, PhaseTag::kFriendly)) {
    snap.restore(c);
    c.set_recolor_count(helper.u, iu);
    return std::string("no L-perfect matching for the rest of the clique");
  }
  const Vertex v = helper.v;
  mark_blocked(std::span<const Vertex>(&v, 1), c, adj, blocked);
  Color pick = kNoColor;
  for (Color y = 1; y <= c.delta() && pick == kNoColor; ++y)
    if (!blocked[y]) pick = y;
  if (pick == kNoColor) {
    snap.restore(c);
    c.set_recolor_count(helper.u, iu);
    return std::string("no free color for the closing vertex");
  }
  c.set(v, pick, PhaseTag::kFriendly);
  return std::nullopt;
}

}  // namespace dcolor

namespace dcolor {

namespace {

void check_shadow(const PhaseInputs& in, const PartialColoring& c, int phase) {
  if (!in.shadow) return;
  if (auto e = monochromatic_edge(c, *in.shadow)) {
    throw InvariantError("phase " + std::to_string(phase) + " left edge (" + std::to_string(e->u) + "," +
                         std::to_string(e->v) + ") monochromatic");
  }
}

}  // namespace

PhaseResult run_phases(const PhaseInputs& in) {
  PhaseResult res;
  const StoredAdjacency adj{in.h, in.hplus};
  const auto& cliques = in.dec.cliques;
  res.clique_phase.assign(cliques.size(), 0);
  res.phase4.resize(cliques.size());
  auto fail = [&](int phase, std::int32_t clique, Vertex v, std::string why) {
    res.failure = RunFailure{phase, clique, v, std::move(why)};
    return res;
  };
  const auto id = [](std::size_t i) { return static_cast<std::int32_t>(i); };

  res.coloring = one_shot(in.h, in.pal, in.params.alpha, in.seed);
  PartialColoring& c = res.coloring;
  check_shadow(in, c, 1);

  for (std::size_t i = 0; i < cliques.size(); ++i) {
    const auto& k = cliques[i];
    if (k.size_class != SizeClass::kSmall || k.friendly) continue;
    if (!color_clique_by_matching(k.members, c, in.pal.l2, adj, PhaseTag::kLonely))
      return fail(2, id(i), k.members.front(), "no L-perfect matching from L2");
    res.clique_phase[i] = 2;
  }
  check_shadow(in, c, 2);

  if (auto v = greedy_sparse(c, in.dec.sparse, in.pal, adj)) return fail(3, -1, *v, "no free color in L3");
  check_shadow(in, c, 3);

  std::vector<std::uint8_t> keep(c.n(), 0);
  for (Vertex v : in.dec.sparse) keep[v] = 1;
  for (std::size_t i = 0; i < cliques.size(); ++i)
    if (res.clique_phase[i] == 2)
      for (Vertex v : cliques[i].members) keep[v] = 1;
  strip_residue(c, keep);

  for (std::size_t i = 0; i < cliques.size(); ++i) {
    if (res.clique_phase[i] != 0) continue;
    res.phase4[i] = phase4_color(cliques[i].members, c, in.pal, adj);
    if (res.phase4[i].colored) res.clique_phase[i] = 4;
  }
  check_shadow(in, c, 4);

  for (std::size_t i = 0; i < cliques.size(); ++i) {
    const auto& k = cliques[i];
    if (res.clique_phase[i] != 0 || k.size_class != SizeClass::kCritical) continue;
    const auto& helper = in.helpers.critical[i];
    if (!helper) return fail(5, id(i), k.members.front(), "no critical helper recovered");
    if (auto why = phase5_critical(k.members, *helper, c, in.pal, adj)) return fail(5, id(i), helper->u, *why);
    res.clique_phase[i] = 5;
  }
  check_shadow(in, c, 5);

  for (std::size_t i = 0; i < cliques.size(); ++i) {
    const auto& k = cliques[i];
    if (res.clique_phase[i] != 0) continue;
    if (k.size_class != SizeClass::kSmall || !k.friendly)
      return fail(4, id(i), k.members.front(), "phase 4 failed on a clique no later phase handles");
    const auto& helper = in.helpers.friendly[i];
    if (!helper) return fail(6, id(i), k.members.front(), "no friendly helper recovered");
    if (auto why = phase6_friendly(k.members, *helper, c, in.pal, adj)) return fail(6, id(i), helper->u, *why);
    res.clique_phase[i] = 6;
  }
  check_shadow(in, c, 6);

  for (Vertex v = 0; v < c.n(); ++v) {
    if (!c.colored(v)) return fail(0, in.dec.clique_of[v], v, "vertex left uncolored");
    ++res.vertices_per_phase[static_cast<std::size_t>(c.tag(v))];
  }
  return res;
}

}  // namespace dcolor
