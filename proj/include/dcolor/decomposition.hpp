#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "dcolor/graph.hpp"
#include "dcolor/params.hpp"
#include "dcolor/stream.hpp"
#include "dcolor/types.hpp"

namespace dcolor {

struct DecompSamples {
  std::vector<std::uint8_t> in_sample;
  std::vector<std::vector<Vertex>> sample_nbhd;  // complete, for SAMPLE vertices
  std::vector<std::vector<Vertex>> n_sample;     // reservoir of neighbors
  std::vector<std::vector<Vertex>> i_sample;     // each neighbor w.p. min(1, beta^2/delta)
  std::size_t target = 0;

  std::size_t stored_entries() const;
  std::size_t stored_bits() const;
};

// Consumes edges one at a time during the main pass.
class SampleCollector {
 public:
  SampleCollector(std::size_t n, std::uint32_t delta, const ParamSet& params, std::uint64_t seed);
  void update(Edge e);
  DecompSamples finish();

 private:
  void arrive(Vertex w, Vertex other);

  DecompSamples s_;
  std::vector<std::uint32_t> seen_;
  double i_rate_;
  std::uint64_t nseed_;
  std::uint64_t iseed_;
};

DecompSamples collect_samples(EdgeStream& stream, std::uint32_t delta, const ParamSet& params, std::uint64_t seed);

enum class SizeClass { kSmall, kCritical, kLarge };
const char* size_class_name(SizeClass c);
SizeClass classify_size(std::size_t k, std::uint32_t delta);

struct AlmostClique {
  std::vector<Vertex> members;  // ascending
  SizeClass size_class = SizeClass::kSmall;
  std::size_t non_edges = 0;
  bool holey = false;
  bool friendly = false;
  std::optional<Vertex> witness;
  std::size_t witness_hits = 0;
};

struct Decomposition {
  std::vector<Vertex> sparse;  // ascending
  std::vector<AlmostClique> cliques;
  std::vector<std::int32_t> clique_of;  // -1 for sparse vertices
};

class DecompositionFailed : public std::runtime_error {
 public:
  DecompositionFailed(const std::string& what, std::vector<Vertex> cluster)
      : std::runtime_error(what), cluster_(std::move(cluster)) {}
  const std::vector<Vertex>& cluster() const { return cluster_; }

 private:
  std::vector<Vertex> cluster_;
};

std::size_t non_edges_in_neighborhood(Vertex v, const Graph& oracle);
bool is_eps_sparse(Vertex v, const Graph& oracle, double eps, std::uint32_t delta);
std::size_t count_non_edges(std::span<const Vertex> k, const Graph& oracle);

// Reference decomposer over a full adjacency oracle. With strict=false,
// vertices that fit neither side are placed in V_sparse instead of failing.
Decomposition compute_decomposition(const Graph& oracle, const ParamSet& params, std::uint32_t delta,
                                    bool strict = true);

// Adjacency known from stored structures only (H, SAMPLE, N_sample, I_sample).
Graph heuristic_oracle(const DecompSamples& samples, const Graph& h);

struct Violation {
  std::int32_t clique = -1;  // -1: sparse side or partition
  Vertex vertex = 0;
  std::string property;
  std::string detail;
};

std::vector<Violation> verify_decomposition(const Decomposition& dec, const Graph& oracle, double eps,
                                            std::uint32_t delta);

enum class TesterVerdict { kFriend, kStranger };

// X = |I_sample(v) ∩ K|; Friend iff X > threshold. K must be sorted.
TesterVerdict friend_stranger_test(std::span<const Vertex> k, std::span<const Vertex> i_sample_v,
                                   double threshold);

// Size class, non-edge count t and holey flag from t_oracle (the shadow in
// reference mode, the stored edges otherwise).
void classify_sizes(Decomposition& dec, const Graph& t_oracle, const ParamSet& params, std::uint32_t delta);

void classify_friendly_lonely(Decomposition& dec, const DecompSamples& samples, const ParamSet& params,
                              std::uint32_t delta);

}  // namespace dcolor
