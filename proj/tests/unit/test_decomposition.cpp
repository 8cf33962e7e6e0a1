#include <doctest.h>

#include <cmath>
#include <map>

#include "dcolor/decomposition.hpp"
#include "dcolor/generators.hpp"
#include "dcolor/rng.hpp"

using namespace dcolor;

namespace {

Graph graph_of(const GeneratedInstance& inst) { return Graph::from_edges(inst.n, inst.edges); }

std::size_t brute_non_edges(const std::vector<Vertex>& s, const Graph& g) {
  std::size_t t = 0;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) t += !g.has_edge(s[i], s[j]);
  return t;
}

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  Rng rng(seed);
  Graph g(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (rng.uniform() < p) g.add_edge(u, v);
  g.finalize();
  return g;
}

}  // namespace

TEST_CASE("non-edge counters agree with a brute-force count") {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Graph g = random_graph(30, 0.4, s);
    for (Vertex v = 0; v < g.n(); ++v) {
      const auto nb = g.neighbors(v);
      CHECK(non_edges_in_neighborhood(v, g) == brute_non_edges({nb.begin(), nb.end()}, g));
    }
    std::vector<Vertex> all(g.n());
    for (Vertex v = 0; v < g.n(); ++v) all[v] = v;
    CHECK(count_non_edges(all, g) == brute_non_edges(all, g));
  }
}

TEST_CASE("sparsity of a star centre and a clique vertex") {
  const std::uint32_t d = 40;
  const double eps = 0.1;  // eps^2 d^2 / 2 = 8
  // Star: every pair of leaves is a non-edge.
  Graph star(d + 1);
  for (Vertex v = 1; v <= d; ++v) star.add_edge(0, v);
  star.finalize();
  CHECK(is_eps_sparse(0, star, eps, d));
  // Clique on d+1 vertices: zero non-edges in any neighborhood.
  Graph k(d + 1);
  for (Vertex u = 0; u <= d; ++u)
    for (Vertex v = u + 1; v <= d; ++v) k.add_edge(u, v);
  k.finalize();
  CHECK_FALSE(is_eps_sparse(0, k, eps, d));
  // Remove edges inside N(0) until exactly the threshold of 8 non-edges.
  Graph g(d + 1);
  std::size_t removed = 0;
  for (Vertex u = 0; u <= d; ++u)
    for (Vertex v = u + 1; v <= d; ++v) {
      if (u >= 1 && v == u + 1 && u % 2 == 1 && removed < 7) {
        ++removed;
        continue;
      }
      g.add_edge(u, v);
    }
  g.finalize();
  CHECK(non_edges_in_neighborhood(0, g) == 7);
  CHECK_FALSE(is_eps_sparse(0, g, eps, d));
  Graph h(d + 1);
  removed = 0;
  for (Vertex u = 0; u <= d; ++u)
    for (Vertex v = u + 1; v <= d; ++v) {
      if (u >= 1 && v == u + 1 && u % 2 == 1 && removed < 8) {
        ++removed;
        continue;
      }
      h.add_edge(u, v);
    }
  h.finalize();
  CHECK(non_edges_in_neighborhood(0, h) == 8);
  CHECK(is_eps_sparse(0, h, eps, d));
}

TEST_CASE("reference decomposer recovers planted near-cliques") {
  for (std::uint32_t d : {16U, 24U}) {
    const auto inst = generate_instance(GeneratorSpec::parse("clique-minus-edge:blocks=3,delta=" +
                                                             std::to_string(d) + ",seed=4"));
    const Graph g = graph_of(inst);
    const ParamSet p = ParamSet::defaults(Mode::kDesk, inst.n, d);
    const Decomposition dec = compute_decomposition(g, p, d);
    CHECK(verify_decomposition(dec, g, p.eps, d).empty());
    REQUIRE(dec.cliques.size() == inst.blocks.size());
    for (const auto& b : inst.blocks) {
      const auto ci = dec.clique_of[b.members.front()];
      REQUIRE(ci >= 0);
      CHECK(dec.cliques[ci].members == b.members);
    }
  }
}

TEST_CASE("random regular graphs decompose as all sparse") {
  const auto inst = generate_instance(GeneratorSpec::parse("random-regular:n=400,delta=16,seed=2"));
  const Graph g = graph_of(inst);
  const ParamSet p = ParamSet::defaults(Mode::kDesk, inst.n, 16);
  const Decomposition dec = compute_decomposition(g, p, 16);
  CHECK(dec.cliques.empty());
  CHECK(dec.sparse.size() == inst.n);
  CHECK(verify_decomposition(dec, g, p.eps, 16).empty());
}

TEST_CASE("verifier flags a corrupted partition") {
  const auto inst = generate_instance(GeneratorSpec::parse("clique:count=2,delta=16,seed=1"));
  const Graph g = graph_of(inst);
  const ParamSet p = ParamSet::defaults(Mode::kDesk, inst.n, 16);
  Decomposition dec = compute_decomposition(g, p, 16);
  REQUIRE(!dec.cliques.empty());
  // Move a clique member to the sparse side: it is not sparse there.
  auto& mem = dec.cliques[0].members;
  // In a true clique no member has a non-edge around it.
  auto it = std::find_if(mem.begin(), mem.end(), [&](Vertex x) {
    const auto nb = g.neighbors(x);
    return std::all_of(nb.begin(), nb.end(), [&](Vertex y) { return std::binary_search(mem.begin(), mem.end(), y); });
  });
  REQUIRE(it != mem.end());
  const Vertex v = *it;
  mem.erase(it);
  dec.clique_of[v] = -1;
  dec.sparse.push_back(v);
  std::sort(dec.sparse.begin(), dec.sparse.end());
  const auto vio = verify_decomposition(dec, g, p.eps, 16);
  CHECK_FALSE(vio.empty());
  bool sparse_flag = false;
  for (const auto& x : vio) sparse_flag = sparse_flag || (x.property == "sparse" && x.vertex == v);
  CHECK(sparse_flag);
  // Drop a vertex from the partition entirely.
  Decomposition dec2 = compute_decomposition(g, p, 16);
  const Vertex w = dec2.cliques[0].members.front();
  dec2.cliques[0].members.erase(dec2.cliques[0].members.begin());
  dec2.clique_of[w] = -1;
  bool partition_flag = false;
  for (const auto& x : verify_decomposition(dec2, g, p.eps, 16)) partition_flag |= x.property == "partition";
  CHECK(partition_flag);
}

TEST_CASE("size classes") {
  CHECK(classify_size(16, 16) == SizeClass::kSmall);
  CHECK(classify_size(17, 16) == SizeClass::kCritical);
  CHECK(classify_size(18, 16) == SizeClass::kLarge);
  CHECK(std::string(size_class_name(SizeClass::kCritical)) == "critical");
}

TEST_CASE("friend test is a strict threshold on the overlap") {
  const std::vector<Vertex> k = {1, 3, 5, 7, 9};
  const std::vector<Vertex> i = {0, 1, 2, 3, 5, 8};
  CHECK(friend_stranger_test(k, i, 2.0) == TesterVerdict::kFriend);
  CHECK(friend_stranger_test(k, i, 3.0) == TesterVerdict::kStranger);
  CHECK(friend_stranger_test(k, {}, 0.0) == TesterVerdict::kStranger);
}

TEST_CASE("lonely and friendly small cliques are classified as planted") {
  const auto lonely = generate_instance(GeneratorSpec::parse("lonely-clique:count=2,delta=16,seed=3"));
  const auto friendly = generate_instance(GeneratorSpec::parse("hard-phase6:count=1,delta=16,seed=3"));
  for (const auto* inst : {&lonely, &friendly}) {
    const Graph g = graph_of(*inst);
    const ParamSet p = ParamSet::defaults(Mode::kDesk, inst->n, 16);
    Decomposition dec = compute_decomposition(g, p, 16, false);
    EdgeSource src = EdgeSource::from_edges(inst->n, inst->edges, 5);
    EdgeStream s = src.open();
    const DecompSamples samples = collect_samples(s, 16, p, 9);
    classify_sizes(dec, g, p, 16);
    classify_friendly_lonely(dec, samples, p, 16);
    for (const auto& b : inst->blocks) {
      if (b.kind != "lonely-small" && b.kind != "friendly-small") continue;
      const auto ci = dec.clique_of[b.members.front()];
      REQUIRE(ci >= 0);
      const auto& c = dec.cliques[ci];
      CHECK(c.size_class == SizeClass::kSmall);
      CHECK(c.friendly == (b.kind == "friendly-small"));
      if (c.friendly) {
        REQUIRE(c.witness.has_value());
        CHECK(dec.clique_of[*c.witness] != ci);
        CHECK(static_cast<double>(c.witness_hits) > p.friend_threshold(16));
      }
    }
  }
}

TEST_CASE("reservoir sample is uniform over arrivals") {
  // One hub with 40 neighbors and a reservoir of size target.
  const std::size_t n = 41, trials = 4000;
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({0, v});
  ParamSet p = ParamSet::defaults(Mode::kDesk, n, 40);
  p.apply_overrides({{"nsample", "10"}});
  std::map<Vertex, std::size_t> freq;
  std::size_t target = 0;
  for (std::uint64_t s = 0; s < trials; ++s) {
    SampleCollector c(n, 40, p, s);
    for (const Edge& e : edges) c.update(e);
    const DecompSamples d = c.finish();
    target = d.target;
    REQUIRE(d.n_sample[0].size() == std::min<std::size_t>(target, 40));
    for (Vertex v : d.n_sample[0]) ++freq[v];
    CHECK(d.i_sample[0].size() <= 40);
  }
  REQUIRE(target < 40);
  const double expect = static_cast<double>(trials) * static_cast<double>(target) / 40.0;
  const double sd = std::sqrt(expect * (1 - static_cast<double>(target) / 40.0));
  for (Vertex v = 1; v < n; ++v) CHECK(std::abs(static_cast<double>(freq[v]) - expect) < 5 * sd);
}

TEST_CASE("heuristic oracle contains stored edges only") {
  const auto inst = generate_instance(GeneratorSpec::parse("clique-minus-edge:blocks=2,delta=16,seed=6"));
  const Graph g = graph_of(inst);
  const ParamSet p = ParamSet::defaults(Mode::kDesk, inst.n, 16);
  EdgeSource src = EdgeSource::from_edges(inst.n, inst.edges, 1);
  EdgeStream s = src.open();
  const DecompSamples samples = collect_samples(s, 16, p, 2);
  Graph empty(inst.n);
  empty.finalize();
  const Graph o = heuristic_oracle(samples, empty);
  for (Vertex v = 0; v < o.n(); ++v)
    for (Vertex u : o.neighbors(v)) CHECK(g.has_edge(u, v));
  CHECK(samples.stored_bits() >= samples.stored_entries());
}
