#include <doctest.h>

#include <set>

#include "dcolor/coloring.hpp"
#include "dcolor/rng.hpp"
#include "oracles/graph_oracle.hpp"

using namespace dcolor;

namespace {

std::size_t brute_max_matching(const BipartiteGraph& g, std::size_t i, std::uint32_t used) {
  if (i == g.left) return 0;
  std::size_t best = brute_max_matching(g, i + 1, used);
  for (std::uint32_t r : g.adj[i])
    if (!(used >> r & 1)) best = std::max(best, 1 + brute_max_matching(g, i + 1, used | 1U << r));
  return best;
}

void check_valid(const BipartiteGraph& g, const std::vector<std::int32_t>& m) {
  REQUIRE(m.size() == g.left);
  std::set<std::int32_t> seen;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] < 0) continue;
    CHECK(std::find(g.adj[i].begin(), g.adj[i].end(), static_cast<std::uint32_t>(m[i])) != g.adj[i].end());
    CHECK(seen.insert(m[i]).second);
  }
}

}  // namespace

TEST_CASE("maximum matching size equals exhaustive search") {
  Rng rng(12);
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t l = 1 + rng.below(7), r = 1 + rng.below(8);
    const double p = rng.uniform();
    BipartiteGraph g(l, r);
    std::vector<std::uint32_t> masks(l, 0);
    for (std::size_t i = 0; i < l; ++i)
      for (std::uint32_t j = 0; j < r; ++j)
        if (rng.uniform() < p) {
          g.adj[i].push_back(j);
          masks[i] |= 1U << j;
        }
    const auto m = maximum_matching(g);
    check_valid(g, m);
    const auto size = static_cast<std::size_t>(std::count_if(m.begin(), m.end(), [](auto x) { return x >= 0; }));
    CHECK(size == brute_max_matching(g, 0, 0));
    const auto lp = l_perfect_matching(g);
    CHECK(lp.has_value() == oracle::hall_holds(masks));
    if (lp) {
      std::set<std::uint32_t> distinct(lp->begin(), lp->end());
      CHECK(distinct.size() == l);
    }
  }
}

TEST_CASE("long augmenting paths do not exhaust the stack") {
  // Left i sees right i and i+1; a greedy start on i+1 forces one long augmentation.
  const std::size_t n = 200000;
  BipartiteGraph g(n, n);
  for (std::uint32_t i = 0; i < n; ++i) {
    if (i + 1 < n) g.adj[i].push_back(i + 1);
    g.adj[i].push_back(i);
  }
  const auto m = l_perfect_matching(g);
  REQUIRE(m.has_value());
  CHECK((*m)[n - 1] == n - 1);
}

TEST_CASE("empty sides") {
  CHECK(maximum_matching(BipartiteGraph(0, 5)).empty());
  CHECK(l_perfect_matching(BipartiteGraph(0, 0)).has_value());
  CHECK_FALSE(l_perfect_matching(BipartiteGraph(2, 0)).has_value());
}
