#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "dcolor/graph.hpp"
#include "dcolor/params.hpp"
#include "dcolor/stream.hpp"
#include "dcolor/types.hpp"

namespace dcolor {

using ColorList = std::vector<Color>;  // ascending, no duplicates

struct PaletteSet {
  std::size_t n = 0;
  std::uint32_t delta = 0;
  std::size_t words = 0;  // 64-bit words per union bitset

  std::vector<Color> l1;
  std::vector<ColorList> l2, l3, l4star, l5;
  std::vector<std::vector<ColorList>> l4;  // [i][v], i < beta
  std::vector<std::vector<ColorList>> l6;  // [i][v], i < 2*beta

  std::vector<std::uint64_t> union_bits;  // n * words; bit c-1 for color c

  std::span<const std::uint64_t> union_of(Vertex v) const { return {union_bits.data() + v * words, words}; }
  bool in_union(Vertex v, Color c) const {
    return c >= 1 && c <= delta && (union_bits[v * words + (c - 1) / 64] >> ((c - 1) % 64) & 1);
  }
  std::size_t total_list_entries() const;
};

// Identifies one list of the bundle, for callers that select S by name.
enum class ListKind { kL1, kL2, kL3, kL4Star, kL4, kL5, kL6 };

struct ListRef {
  ListKind kind = ListKind::kL2;
  std::size_t index = 0;  // for kL4 and kL6
};

const ColorList& list_of(const PaletteSet& pal, ListRef ref, Vertex v);

PaletteSet sample_palettes(std::size_t n, std::uint32_t delta, const ParamSet& params, std::uint64_t seed);

// Draws a Bernoulli(rate) subset of 1..delta.
ColorList sample_color_list(std::uint64_t seed, std::uint32_t delta, double rate);

bool conflict_keep(Edge e, const PaletteSet& pal);

// Stored edges of the stream whose endpoints' union lists intersect.
class ConflictGraph {
 public:
  ConflictGraph() = default;
  explicit ConflictGraph(std::size_t n) : graph_(n) {}

  void offer(Edge e, const PaletteSet& pal) {
    if (conflict_keep(e, pal)) graph_.add_edge(e.u, e.v);
  }
  void finalize() { graph_.finalize(); }

  const Graph& graph() const { return graph_; }
  std::size_t stored_edges() const { return graph_.edge_count(); }

 private:
  Graph graph_;
};

ConflictGraph build_conflict_graph(EdgeStream& stream, const PaletteSet& pal);

struct PaletteSpaceReport {
  std::map<std::string, double> mean_list_size;
  std::map<std::size_t, std::size_t> union_size_histogram;
  std::size_t list_entries = 0;
  std::size_t h_edges = 0;
  std::size_t bits = 0;
};

PaletteSpaceReport palette_space_report(const PaletteSet& pal, const ConflictGraph& h);

std::size_t ceil_log2(std::size_t x);

}  // namespace dcolor
