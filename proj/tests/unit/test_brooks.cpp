#include <doctest.h>

#include "dcolor/coloring.hpp"
#include "dcolor/generators.hpp"

using namespace dcolor;

namespace {

Graph make_graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  g.finalize();
  return g;
}

void check_proper(const Graph& g, const std::vector<Color>& c, std::uint32_t delta) {
  REQUIRE(c.size() == g.n());
  for (Vertex v = 0; v < g.n(); ++v) {
    CHECK(c[v] >= 1);
    CHECK(c[v] <= delta);
    for (Vertex w : g.neighbors(v)) CHECK(c[v] != c[w]);
  }
}

Graph cycle(std::size_t n) {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex v = 0; v < n; ++v) e.emplace_back(v, static_cast<Vertex>((v + 1) % n));
  return make_graph(n, e);
}

}  // namespace

TEST_CASE("Petersen graph is 3-colored") {
  std::vector<std::pair<Vertex, Vertex>> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(i, i + 5);
    e.emplace_back(i + 5, (i + 2) % 5 + 5);
  }
  const Graph g = make_graph(10, e);
  check_proper(g, offline_brooks(g, 3), 3);
}

TEST_CASE("K4 minus an edge is 3-colored and K4 is rejected") {
  const Graph g = make_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  check_proper(g, offline_brooks(g, 3), 3);
  const Graph k4 = make_graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_THROWS_AS(offline_brooks(k4, 3), InvariantError);
  check_proper(k4, offline_brooks(k4, 4), 4);
}

TEST_CASE("cycles under delta = 2") {
  check_proper(cycle(8), offline_brooks(cycle(8), 2), 2);
  CHECK_THROWS_AS(offline_brooks(cycle(7), 2), InvariantError);
  check_proper(cycle(7), offline_brooks(cycle(7), 3), 3);
}

TEST_CASE("cut vertices join blocks that are colored separately") {
  // Two K4-minus-edge blocks glued at vertex 3 (degree 3 in delta = 4).
  const Graph g = make_graph(7, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}});
  check_proper(g, offline_brooks(g, 4), 4);
  CHECK(g.max_degree() == 4);
  // Two triangles sharing one vertex, delta = 4 but 3 colors would also do.
  const Graph bow = make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}, {2, 4}});
  check_proper(bow, offline_brooks(bow, 4), 4);
}

TEST_CASE("generated regular graphs and unions are colored") {
  for (std::uint32_t d : {3U, 4U, 7U, 16U}) {
    for (std::uint64_t s = 0; s < 5; ++s) {
      const auto inst = generate_instance(
          GeneratorSpec::parse("random-regular:n=200,delta=" + std::to_string(d) + ",seed=" + std::to_string(s)));
      const Graph g = Graph::from_edges(inst.n, inst.edges);
      check_proper(g, offline_brooks(g, d), d);
    }
  }
  const auto inst = generate_instance(GeneratorSpec::parse("clique-minus-edge:blocks=5,delta=16,seed=1"));
  const Graph g = Graph::from_edges(inst.n, inst.edges);
  check_proper(g, offline_brooks(g, 16), 16);
}

TEST_CASE("isolated vertices and empty graphs") {
  const Graph g = make_graph(3, {});
  check_proper(g, offline_brooks(g, 1), 1);
  CHECK(offline_brooks(make_graph(0, {}), 1).empty());
}
