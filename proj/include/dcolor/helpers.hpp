#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "dcolor/decomposition.hpp"
#include "dcolor/graph.hpp"
#include "dcolor/sketch.hpp"
#include "dcolor/types.hpp"

namespace dcolor {

// u, v in K with (u, v) a non-edge; N(v) recovered from the sketches.
struct CriticalHelper {
  Vertex u = 0;
  Vertex v = 0;
  std::vector<Vertex> nv;  // ascending
  std::uint32_t rate = 0;
};

// u outside K, v and w in K; u-v and v-w edges, u-w a non-edge.
struct FriendlyHelper {
  Vertex u = 0;
  Vertex v = 0;
  Vertex w = 0;
  std::vector<Vertex> nv;
  std::vector<Vertex> nw;
};

// N(w) for w in K from the sketch of χ(N(w)) − χ(K) at rate level k, or
// nullopt when the measurement does not decode to a consistent neighborhood.
std::optional<std::vector<Vertex>> recover_neighborhood(const SketchBank& bank, std::size_t k, Vertex w,
                                                        std::span<const Vertex> clique,
                                                        std::span<const Fp> phi_v_k,
                                                        std::span<const Fp> phi_r_k);

// `stored` supplies non-edge degrees inside K for the partner choice.
std::optional<CriticalHelper> find_critical_helper(std::span<const Vertex> clique, const SketchBank& bank,
                                                   const Graph& stored);

std::optional<FriendlyHelper> find_friendly_helper(std::span<const Vertex> clique, Vertex u,
                                                   const SketchBank& bank);

struct HelperSet {
  std::vector<std::optional<CriticalHelper>> critical;  // per clique index
  std::vector<std::optional<FriendlyHelper>> friendly;
};

HelperSet find_helpers(const Decomposition& dec, const SketchBank& bank, const Graph& stored);

// Union of the stars {x} x N(x) of every recovered neighborhood.
Graph build_recovery_graph(std::size_t n, const HelperSet& helpers);

// Per-vertex flag: N_{H+}(x) is a full recovered neighborhood.
std::vector<std::uint8_t> recovered_vertices(std::size_t n, const HelperSet& helpers);

}  // namespace dcolor
