#include <doctest.h>

#include <algorithm>
#include <set>

#include "dcolor/generators.hpp"
#include "dcolor/stream.hpp"

using namespace dcolor;

namespace {

std::size_t parse_error_line(const std::string& text) {
  try {
    parse_edge_list(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

}  // namespace

TEST_CASE("edge list parsing accepts comments and blank lines") {
  const auto p = parse_edge_list("# a graph\n4\n0 1\n\n1 2 # trailing\n2 3\n");
  CHECK(p.n == 4);
  CHECK(p.edges.size() == 3);
}

TEST_CASE("edge list parsing rejects malformed input with line numbers") {
  CHECK_THROWS_AS(parse_edge_list(""), ParseError);
  CHECK(parse_error_line("0\n") == 1);
  CHECK(parse_error_line("3\n0 1\n1 x\n") == 3);
  CHECK(parse_error_line("3\n0 3\n") == 2);
  CHECK(parse_error_line("3\n1 1\n") == 2);
  CHECK(parse_error_line("3\n0 1\n1 0\n") == 3);
  CHECK(parse_error_line("3\n0 1 2\n") == 2);
}

TEST_CASE("format and parse round-trip") {
  std::vector<Edge> e = {{0, 1}, {1, 2}, {0, 3}};
  const auto p = parse_edge_list(format_edge_list(4, e));
  CHECK(p.n == 4);
  std::set<std::pair<Vertex, Vertex>> got;
  for (auto x : p.edges) got.insert({std::min(x.u, x.v), std::max(x.u, x.v)});
  CHECK(got == std::set<std::pair<Vertex, Vertex>>{{0, 1}, {1, 2}, {0, 3}});
}

TEST_CASE("a pass yields each edge once and then refuses further pulls") {
  EdgeSource src = EdgeSource::from_text("3\n0 1\n1 2\n", 5);
  EdgeStream s = src.open();
  CHECK(s.next().has_value());
  CHECK(s.next().has_value());
  CHECK_FALSE(s.next().has_value());
  CHECK_THROWS_AS(s.next(), StreamError);
  CHECK(s.delivered() == 2);
  CHECK(src.passes() == 1);
}

TEST_CASE("arrival order is a fixed permutation across passes") {
  std::vector<Edge> edges;
  for (Vertex i = 0; i + 1 < 50; ++i) edges.push_back({i, i + 1});
  EdgeSource src = EdgeSource::from_edges(50, edges, 17);
  auto drain = [&] {
    std::vector<Edge> out;
    EdgeStream s = src.open();
    while (auto e = s.next()) out.push_back(*e);
    return out;
  };
  const auto a = drain(), b = drain();
  CHECK(src.passes() == 2);
  REQUIRE(a.size() == edges.size());
  bool equal = true, shuffled = false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    equal = equal && a[i].u == b[i].u && a[i].v == b[i].v;
    shuffled = shuffled || a[i].u != edges[i].u;
  }
  CHECK(equal);
  CHECK(shuffled);
}

TEST_CASE("census reports degrees and components") {
  EdgeSource src = EdgeSource::from_text("6\n0 1\n1 2\n3 4\n", 1);
  EdgeStream s = src.open();
  Graph shadow;
  const Census c = run_census(s, 1, &shadow);
  CHECK(c.meta.n == 6);
  CHECK(c.meta.m == 3);
  CHECK(c.meta.delta == 2);
  CHECK(c.degree == DegreeTable{1, 2, 1, 1, 1, 0});
  CHECK(c.components.components.size() == 3);
  CHECK(shadow.edge_count() == 3);
  CHECK(shadow.has_edge(2, 1));
}

TEST_CASE("colorability gate names clique and odd-cycle components") {
  {
    auto k5 = generate_instance(GeneratorSpec::parse("clique:delta=4"));
    EdgeSource src = EdgeSource::from_edges(k5.n, k5.edges, 1);
    EdgeStream s = src.open();
    const auto msg = colorability_failure(run_census(s), 4);
    REQUIRE(msg.has_value());
    CHECK(msg->find("component {0..4} is a 5-clique") != std::string::npos);
  }
  {
    EdgeSource src = EdgeSource::from_text("5\n0 1\n1 2\n2 3\n3 4\n4 0\n", 1);
    EdgeStream s = src.open();
    const auto msg = colorability_failure(run_census(s), 2);
    REQUIRE(msg.has_value());
    CHECK(msg->find("odd cycle of length 5") != std::string::npos);
  }
  {
    EdgeSource src = EdgeSource::from_text("4\n0 1\n1 2\n2 3\n3 0\n", 1);
    EdgeStream s = src.open();
    CHECK_FALSE(colorability_failure(run_census(s), 2).has_value());
  }
  {
    EdgeSource src = EdgeSource::from_text("3\n0 1\n1 2\n", 1);
    EdgeStream s = src.open();
    CHECK_THROWS_AS(check_colorability(run_census(s), 1), InvariantError);
  }
}

TEST_CASE("generator edge counts") {
  CHECK(generate_instance(GeneratorSpec::parse("clique-minus-edge:delta=4")).edges.size() == 9);
  CHECK(generate_instance(GeneratorSpec::parse("clique-minus-edge:delta=16,blocks=8")).edges.size() == 8 * (136 - 1));
  CHECK(generate_instance(GeneratorSpec::parse("clique-pairs:delta=4,pairs=1")).edges.size() == 20);
  CHECK(generate_instance(GeneratorSpec::parse("clique-pairs:Δ=4,pairs=2")).edges.size() == 40);
  CHECK(generate_instance(GeneratorSpec::parse("clique:delta=4")).edges.size() == 10);
}

TEST_CASE("generators realize the requested maximum degree") {
  for (const char* spec : {"clique-minus-edge:delta=16,blocks=3", "clique-pairs:delta=16,pairs=2",
                           "lonely-clique:delta=16,count=2", "hard-phase6:delta=4", "hard-phase6:delta=16,count=2",
                           "holey-clique:delta=32,holes=32", "large-clique:delta=24", "mixed:delta=16"}) {
    const auto g = generate_instance(GeneratorSpec::parse(spec));
    std::vector<std::uint32_t> deg(g.n, 0);
    for (auto e : g.edges) {
      ++deg[e.u];
      ++deg[e.v];
      CHECK(e.u < e.v);
    }
    CHECK_MESSAGE(*std::max_element(deg.begin(), deg.end()) == g.delta, spec);
  }
}

TEST_CASE("hard-phase6 outside vertices see half the clique") {
  const auto g = generate_instance(GeneratorSpec::parse("hard-phase6:delta=16"));
  REQUIRE(g.blocks.size() == 1);
  const auto& b = g.blocks[0];
  REQUIRE(b.friend_vertex.has_value());
  const Graph gr = Graph::from_edges(g.n, g.edges);
  CHECK(intersection_size(gr.neighbors(*b.friend_vertex), b.members) == 8);
}

TEST_CASE("random families respect their degree bounds") {
  const auto rr = generate_instance(GeneratorSpec::parse("random-regular:n=200,delta=6,seed=3"));
  const Graph g = Graph::from_edges(rr.n, rr.edges);
  for (Vertex v = 0; v < g.n(); ++v) CHECK(g.degree(v) == 6);
  const auto er = generate_instance(GeneratorSpec::parse("erdos-renyi:n=300,delta=10,avg=6,seed=4"));
  const Graph h = Graph::from_edges(er.n, er.edges);
  CHECK(h.max_degree() <= 10);
  CHECK(h.max_degree() == er.delta);
}

TEST_CASE("generator specs reject unknown keys and families") {
  CHECK_THROWS_AS(generate_instance(GeneratorSpec::parse("clique:delta=4,colour=3")), SpecError);
  CHECK_THROWS_AS(generate_instance(GeneratorSpec::parse("nosuch:delta=4")), SpecError);
  CHECK_THROWS_AS(generate_instance(GeneratorSpec::parse("holey-clique:delta=8,holes=9")), SpecError);
}

TEST_CASE("generators are deterministic in the seed") {
  const auto a = generate_instance(GeneratorSpec::parse("clique-pairs:delta=8,pairs=3,seed=5"));
  const auto b = generate_instance(GeneratorSpec::parse("clique-pairs:delta=8,pairs=3,seed=5"));
  REQUIRE(a.edges.size() == b.edges.size());
  for (std::size_t i = 0; i < a.edges.size(); ++i) CHECK((a.edges[i].u == b.edges[i].u && a.edges[i].v == b.edges[i].v));
}
