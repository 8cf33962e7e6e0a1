#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dcolor/coloring.hpp"
#include "dcolor/decomposition.hpp"
#include "dcolor/helpers.hpp"
#include "dcolor/palette.hpp"
#include "dcolor/params.hpp"
#include "dcolor/sketch.hpp"
#include "dcolor/stream.hpp"

namespace dcolor {

struct RunConfig {
  Mode mode = Mode::kDesk;
  std::map<std::string, std::string> overrides;
  std::uint64_t seed = 1;
  std::uint32_t retries = 3;
  bool shadow = true;
  std::optional<std::size_t> budget_bytes;
  std::optional<std::uint32_t> delta;  // declared; census maximum otherwise
  bool allow_offline = true;           // Δ < Δ0 or m small enough: color offline
};

// Stored bits by component, shadow excluded.
struct SpaceReport {
  std::map<std::string, std::size_t> bits;
  std::size_t total() const;
};

struct CliqueTrace {
  std::size_t size = 0;
  SizeClass size_class = SizeClass::kSmall;
  std::size_t non_edges = 0;
  bool holey = false;
  bool friendly = false;
  std::optional<Vertex> witness;
  int phase = 0;
  std::size_t best_matching = 0;
  std::size_t ell = 0;
  Vertex first_member = 0;
};

struct AttemptReport {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string stage;  // where it stopped: "decomposition", "phases", "verify", "done"
  std::optional<RunFailure> failure;
  std::string error;
  std::size_t sparse_vertices = 0;
  std::vector<CliqueTrace> cliques;
  std::vector<std::size_t> vertices_per_phase;
  SpaceReport space;
};

// What the chosen attempt built, for callers that audit invariants.
struct AttemptArtifacts {
  ParamSet params;
  PaletteSet palettes;
  Graph h;
  Graph hplus;
  Decomposition decomposition;
  HelperSet helpers;
  PhaseResult phases;
};

struct RunReport {
  std::string status;  // "ok", "not-colorable", "failed"
  std::string message;
  std::string path;    // "streaming" or "offline"
  Mode mode = Mode::kDesk;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint32_t delta = 0;
  std::size_t passes = 0;
  std::size_t colors_used = 0;
  ParamSet params;
  std::vector<std::string> clamped_rates;
  std::vector<AttemptReport> attempts;
  std::optional<std::size_t> chosen;
  SpaceReport space_total;  // all copies collected in the main pass
};

struct RunOutput {
  RunReport report;
  std::vector<Color> coloring;  // empty unless status == "ok"
  std::optional<Graph> shadow;
  std::optional<AttemptArtifacts> artifacts;
};

// Two passes over src: a census with the colorability gate (and the shadow
// copy when cfg.shadow), then one main pass feeding every independent copy.
RunOutput run_color(EdgeSource& src, const RunConfig& cfg, bool keep_artifacts = false);

// First problem with a coloring, streaming the edges once.
std::optional<std::string> verify_coloring(EdgeStream& stream, const std::vector<Color>& coloring,
                                           std::uint32_t delta);

std::string report_json(const RunReport& report, int indent = 2);

std::string format_coloring(const std::vector<Color>& coloring);
std::vector<Color> parse_coloring(const std::string& text, std::size_t n);

}  // namespace dcolor
