#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dcolor/decomposition.hpp"
#include "dcolor/graph.hpp"
#include "dcolor/helpers.hpp"
#include "dcolor/palette.hpp"
#include "dcolor/params.hpp"
#include "dcolor/types.hpp"

namespace dcolor {

// ---- matching ----

struct BipartiteGraph {
  std::size_t left = 0;
  std::size_t right = 0;
  std::vector<std::vector<std::uint32_t>> adj;  // left -> right ids

  explicit BipartiteGraph(std::size_t l = 0, std::size_t r = 0) : left(l), right(r), adj(l) {}
};

// Hopcroft-Karp. Entry i is the right partner of left node i, or -1.
std::vector<std::int32_t> maximum_matching(const BipartiteGraph& g);

std::optional<std::vector<std::uint32_t>> l_perfect_matching(const BipartiteGraph& g);

// ---- partial colorings ----

enum class PhaseTag : std::uint8_t { kNone = 0, kOneShot = 1, kLonely = 2, kSparse = 3, kHoley = 4, kCritical = 5,
                                     kFriendly = 6, kOffline = 7 };

class PartialColoring {
 public:
  PartialColoring() = default;
  PartialColoring(std::size_t n, std::uint32_t delta) : delta_(delta), color_(n, kNoColor), tag_(n), recolor_(n, 0) {}

  std::size_t n() const { return color_.size(); }
  std::uint32_t delta() const { return delta_; }
  Color operator[](Vertex v) const { return color_[v]; }
  bool colored(Vertex v) const { return color_[v] != kNoColor; }
  PhaseTag tag(Vertex v) const { return tag_[v]; }
  std::uint32_t recolor_count(Vertex v) const { return recolor_[v]; }
  void bump_recolor(Vertex v) { ++recolor_[v]; }
  void set_recolor_count(Vertex v, std::uint32_t k) { recolor_[v] = k; }

  void set(Vertex v, Color c, PhaseTag t) {
    if (c < 1 || c > delta_) throw InvariantError("color out of range");
    color_[v] = c;
    tag_[v] = t;
  }
  void clear(Vertex v) {
    color_[v] = kNoColor;
    tag_[v] = PhaseTag::kNone;
  }

  const std::vector<Color>& colors() const { return color_; }
  std::size_t colored_count() const;

 private:
  std::uint32_t delta_ = 0;
  std::vector<Color> color_;
  std::vector<PhaseTag> tag_;
  std::vector<std::uint32_t> recolor_;
};

// The stored adjacency consulted after the stream: H and H+.
struct StoredAdjacency {
  const Graph& h;
  const Graph& hplus;

  template <class F>
  void for_each_neighbor(Vertex v, F&& f) const {
    for (Vertex w : h.neighbors(v)) f(w);
    for (Vertex w : hplus.neighbors(v)) f(w);
  }
};

// mask[c] = 1 for colors used by C on the stored neighbors of each v in vs.
void mark_blocked(std::span<const Vertex> vs, const PartialColoring& c, const StoredAdjacency& adj,
                  std::vector<std::uint8_t>& mask);

// First monochromatic edge of g under c, if any.
std::optional<Edge> monochromatic_edge(const PartialColoring& c, const Graph& g);

// |colors available to v| − (deg(v) − coldeg(v)) against a full oracle.
long measure_gap(Vertex v, const PartialColoring& c, const Graph& oracle);

// ---- phases ----

PartialColoring one_shot(const Graph& h, const PaletteSet& pal, std::uint32_t alpha, std::uint64_t seed);

// Colors the uncolored vertices of K from S via an L-perfect matching.
// Colors in `excluded` (and those already used in K) are off the right side.
// Returns false and leaves c untouched on failure.
bool color_clique_by_matching(std::span<const Vertex> k, PartialColoring& c,
                              const std::vector<ColorList>& s, const StoredAdjacency& adj, PhaseTag tag,
                              std::span<const Color> excluded = {});

// Greedy over vs in id order from L3; returns the first vertex with no color.
std::optional<Vertex> greedy_sparse(PartialColoring& c, std::span<const Vertex> vs, const PaletteSet& pal,
                                    const StoredAdjacency& adj);

void strip_residue(PartialColoring& c, const std::vector<std::uint8_t>& keep);

struct ColorfulPair {
  Vertex u, v;
  Color color;
};

// Non-edges of K as seen in the stored adjacency, sorted lexicographically.
std::vector<Edge> stored_non_edges(std::span<const Vertex> k, const StoredAdjacency& adj);

std::vector<ColorfulPair> colorful_matching(std::span<const Edge> non_edges, const PartialColoring& c,
                                            const std::vector<ColorList>& list, const StoredAdjacency& adj);

struct Phase4Outcome {
  bool colored = false;
  std::size_t best_matching = 0;
  std::size_t best_list = 0;
};

Phase4Outcome phase4_color(std::span<const Vertex> k, PartialColoring& c, const PaletteSet& pal,
                           const StoredAdjacency& adj);

// Failure reasons use the strings below; on failure c is unchanged.
std::optional<std::string> phase5_critical(std::span<const Vertex> k, const CriticalHelper& helper,
                                           PartialColoring& c, const PaletteSet& pal, const StoredAdjacency& adj);

std::optional<std::string> phase6_friendly(std::span<const Vertex> k, const FriendlyHelper& helper,
                                           PartialColoring& c, const PaletteSet& pal, const StoredAdjacency& adj);

struct PhaseInputs {
  const Graph& h;
  const Graph& hplus;
  const PaletteSet& pal;
  const Decomposition& dec;
  const HelperSet& helpers;
  const ParamSet& params;
  std::uint32_t delta;
  std::uint64_t seed;
  const Graph* shadow = nullptr;  // enables per-phase properness checks
};

struct RunFailure {
  int phase = 0;
  std::int32_t clique = -1;
  Vertex vertex = 0;
  std::string reason;
};

struct PhaseResult {
  PartialColoring coloring;
  std::vector<int> clique_phase;          // phase that colored each clique, 0 if none
  std::vector<Phase4Outcome> phase4;      // per clique; default when not attempted
  std::vector<std::size_t> vertices_per_phase = std::vector<std::size_t>(8, 0);
  std::optional<RunFailure> failure;
};

PhaseResult run_phases(const PhaseInputs& in);

// ---- offline ----

// Proper Δ-coloring of every component; throws InvariantError when a
// component is a (Δ+1)-clique or, for Δ = 2, an odd cycle.
std::vector<Color> offline_brooks(const Graph& g, std::uint32_t delta);

}  // namespace dcolor
