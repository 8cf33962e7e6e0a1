#include "dcolor/pipeline.hpp"

#include <algorithm>
#include <memory>
#include <sstream>

#include "dcolor/rng.hpp"

namespace dcolor {

std::size_t SpaceReport::total() const {
  std::size_t t = 0;
  for (const auto& [k, v] : bits) t += v;
  return t;
}

namespace {

struct Copy {
  std::uint64_t seed;
  PaletteSet pal;
  ConflictGraph h;
  std::unique_ptr<SampleCollector> samples;
  std::unique_ptr<SketchBank> bank;
};

std::vector<CliqueTrace> trace_cliques(const Decomposition& dec, const ParamSet& params, std::uint32_t delta,
                                       const PhaseResult* ph) {
  std::vector<CliqueTrace> out;
  for (std::size_t i = 0; i < dec.cliques.size(); ++i) {
    const auto& c = dec.cliques[i];
    CliqueTrace t;
    t.size = c.members.size();
    t.size_class = c.size_class;
    t.non_edges = c.non_edges;
    t.holey = c.holey;
    t.friendly = c.friendly;
    t.witness = c.witness;
    t.first_member = c.members.empty() ? 0 : c.members.front();
    t.ell = params.ell(c.non_edges, delta);
    if (ph) {
      t.phase = ph->clique_phase[i];
      t.best_matching = ph->phase4[i].best_matching;
    }
    out.push_back(t);
  }
  return out;
}

std::size_t count_colors(const std::vector<Color>& col) {
  std::vector<Color> s(col);
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

}  // namespace

RunOutput run_color(EdgeSource& src, const RunConfig& cfg, bool keep_artifacts) {
  RunOutput out;
  RunReport& rep = out.report;
  rep.mode = cfg.mode;

  // Pre-pass.
  Graph shadow;
  Census census;
  {
    EdgeStream s = src.open();
    census = run_census(s, cfg.seed, cfg.shadow ? &shadow : nullptr);
  }
  rep.n = census.meta.n;
  rep.m = census.meta.m;
  std::uint32_t delta = census.meta.delta;
  if (cfg.delta) {
    if (*cfg.delta < delta)
      throw SpecError("declared delta " + std::to_string(*cfg.delta) + " is below the maximum degree " +
                      std::to_string(delta));
    delta = *cfg.delta;
  }
  rep.delta = delta;
  if (auto why = colorability_failure(census, delta)) {
    rep.status = "not-colorable";
    rep.message = *why;
    rep.passes = src.passes();
    return out;
  }

  const std::size_t n = rep.n;
  ParamSet params = ParamSet::defaults(cfg.mode, n, delta);
  params.apply_overrides(cfg.overrides);
  rep.params = params;

  const bool offline = cfg.allow_offline &&
                       (delta < params.delta0 || (cfg.budget_bytes && 8 * rep.m <= *cfg.budget_bytes));
  if (offline) {
    rep.path = "offline";
    Graph g(n);
    EdgeStream s = src.open();
    while (auto e = s.next()) g.add_edge(e->u, e->v);
    g.finalize();
    out.coloring = offline_brooks(g, delta);
    rep.passes = src.passes();
    rep.space_total.bits["offline_graph"] = 2 * rep.m * ceil_log2(std::max<std::size_t>(n, 2));
    if (cfg.shadow) {
      EdgeSource tmp = EdgeSource::from_edges(n, shadow.edges(), 0);
      EdgeStream vs = tmp.open();
      if (auto bad = verify_coloring(vs, out.coloring, delta)) throw InvariantError("offline coloring: " + *bad);
      out.shadow = std::move(shadow);
    }
    rep.status = "ok";
    rep.colors_used = count_colors(out.coloring);
    return out;
  }

  rep.path = "streaming";
  params.validate(n, delta);
  rep.clamped_rates = params.clamped_rates(n, delta);

  // All copies share the single main pass.
  std::vector<Copy> copies;
  for (std::uint32_t i = 0; i <= cfg.retries; ++i) {
    const std::uint64_t s = derive_seed(cfg.seed, SeedTag::kAttempt, i);
    Copy c{s, sample_palettes(n, delta, params, s), ConflictGraph(n),
           std::make_unique<SampleCollector>(n, delta, params, s), std::make_unique<SketchBank>(n, delta, params, s)};
    copies.push_back(std::move(c));
  }
  {
    EdgeStream s = src.open();
    while (auto e = s.next())
      for (auto& c : copies) {
        c.h.offer(*e, c.pal);
        c.samples->update(*e);
        c.bank->update(*e);
      }
  }
  rep.passes = src.passes();

  for (std::size_t i = 0; i < copies.size(); ++i) {
    Copy& cp = copies[i];
    cp.h.finalize();
    AttemptReport at;
    at.index = i;
    at.seed = cp.seed;
    DecompSamples samples = cp.samples->finish();

    const auto pal_rep = palette_space_report(cp.pal, cp.h);
    const std::size_t h_bits = pal_rep.h_edges * 2 * ceil_log2(n);
    at.space.bits["palettes"] = pal_rep.bits - h_bits;
    at.space.bits["conflict_graph"] = h_bits;
    at.space.bits["decomposition_samples"] = samples.stored_bits();
    at.space.bits["sketches"] = cp.bank->stored_bits();

    const bool need_more = !rep.chosen.has_value();
    if (need_more) {
      try {
        at.stage = "decomposition";
        Graph heur;
        const Graph* oracle = &shadow;
        if (!cfg.shadow) {
          heur = heuristic_oracle(samples, cp.h.graph());
          oracle = &heur;
        }
        Decomposition dec = compute_decomposition(*oracle, params, delta, cfg.shadow);
        if (cfg.shadow) {
          const auto viol = verify_decomposition(dec, shadow, params.eps, delta);
          if (!viol.empty()) {
            const auto& v = viol.front();
            throw DecompositionFailed("verification: vertex " + std::to_string(v.vertex) + " violates (" +
                                          v.property + "): " + v.detail,
                                      {});
          }
        }
        classify_sizes(dec, *oracle, params, delta);
        classify_friendly_lonely(dec, samples, params, delta);
        at.sparse_vertices = dec.sparse.size();

        at.stage = "phases";
        HelperSet helpers = find_helpers(dec, *cp.bank, cp.h.graph());
        Graph hplus = build_recovery_graph(n, helpers);
        at.space.bits["recovery_graph"] = hplus.edge_count() * 2 * ceil_log2(n);
        PhaseInputs in{cp.h.graph(), hplus, cp.pal, dec, helpers, params, delta, cp.seed,
                       cfg.shadow ? &shadow : nullptr};
        PhaseResult ph = run_phases(in);
        at.cliques = trace_cliques(dec, params, delta, &ph);
        at.vertices_per_phase = ph.vertices_per_phase;
        if (ph.failure) {
          at.failure = ph.failure;
          at.error = "phase " + std::to_string(ph.failure->phase) + ": " + ph.failure->reason;
        } else {
          at.stage = "verify";
          if (cfg.shadow) {
            if (auto e = monochromatic_edge(ph.coloring, shadow))
              throw InvariantError("final coloring has monochromatic edge (" + std::to_string(e->u) + "," +
                                   std::to_string(e->v) + ")");
          }
          at.stage = "done";
          at.ok = true;
          rep.chosen = i;
          out.coloring = ph.coloring.colors();
          if (keep_artifacts) {
            out.artifacts = AttemptArtifacts{params,          std::move(cp.pal), cp.h.graph(), std::move(hplus),
                                             std::move(dec), std::move(helpers), std::move(ph)};
          }
        }
      } catch (const DecompositionFailed& e) {
        at.error = e.what();
      }
    } else {
      at.stage = "unused";
    }
    for (const auto& [k, v] : at.space.bits) rep.space_total.bits[k] += v;
    rep.attempts.push_back(std::move(at));
  }

  if (rep.chosen) {
    rep.status = "ok";
    rep.colors_used = count_colors(out.coloring);
  } else {
    rep.status = "failed";
    rep.message = rep.attempts.empty() ? "no attempts" : rep.attempts.back().error;
  }
  if (cfg.shadow) out.shadow = std::move(shadow);
  return out;
}

std::optional<std::string> verify_coloring(EdgeStream& stream, const std::vector<Color>& coloring,
                                           std::uint32_t delta) {
  const std::size_t n = stream.n();
  if (coloring.size() != n)
    return "coloring covers " + std::to_string(coloring.size()) + " vertices, graph has " + std::to_string(n);
  for (Vertex v = 0; v < n; ++v) {
    if (coloring[v] == kNoColor) return "vertex " + std::to_string(v) + " is uncolored";
    if (coloring[v] > delta)
      return "color out of range at vertex " + std::to_string(v) + ": " + std::to_string(coloring[v]) + " > " +
             std::to_string(delta);
  }
  std::optional<std::string> bad;
  while (auto e = stream.next()) {
    if (!bad && coloring[e->u] == coloring[e->v])
      bad = "monochromatic edge (" + std::to_string(e->u) + "," + std::to_string(e->v) + ") with color " +
            std::to_string(coloring[e->u]);
  }
  return bad;
}

std::string format_coloring(const std::vector<Color>& coloring) {
  std::ostringstream os;
  for (Vertex v = 0; v < coloring.size(); ++v) os << v << ' ' << coloring[v] << '\n';
  return os.str();
}

std::vector<Color> parse_coloring(const std::string& text, std::size_t n) {
  std::vector<Color> out(n, kNoColor);
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    long long v = -1, c = -1;
    std::string extra;
    if (!(ls >> v >> c) || (ls >> extra)) throw ParseError(lineno, "expected 'vertex color'");
    if (v < 0 || static_cast<std::size_t>(v) >= n) throw ParseError(lineno, "vertex out of range");
    if (c < 0 || c > 0xFFFFFFFFLL) throw ParseError(lineno, "color out of range");
    if (out[static_cast<std::size_t>(v)] != kNoColor) throw ParseError(lineno, "vertex colored twice");
    out[static_cast<std::size_t>(v)] = static_cast<Color>(c);
  }
  return out;
}

}  // namespace dcolor
