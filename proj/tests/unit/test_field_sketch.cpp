#include <doctest.h>

#include <sstream>

#include "dcolor/graph.hpp"
#include "dcolor/generators.hpp"
#include "dcolor/rng.hpp"
#include "dcolor/sketch.hpp"
#include "oracles/field_oracle.hpp"

using namespace dcolor;

namespace {

SparseVector random_sparse(Rng& rng, std::size_t n, std::size_t k, Fp p) {
  std::vector<Vertex> cols(n);
  for (Vertex i = 0; i < n; ++i) cols[i] = i;
  rng.shuffle(cols.begin(), cols.end());
  cols.resize(k);
  std::sort(cols.begin(), cols.end());
  SparseVector x;
  for (Vertex c : cols) x.entries.emplace_back(c, static_cast<Fp>(1 + rng.below(p - 1)));
  return x;
}

std::vector<std::pair<oracle::u64, oracle::u64>> as_pairs(const SparseVector& x) {
  std::vector<std::pair<oracle::u64, oracle::u64>> out;
  for (auto [i, v] : x.entries) out.emplace_back(i, v);
  return out;
}

}  // namespace

TEST_CASE("canonical prime exceeds n and has a floor of 101") {
  CHECK(FieldParams::for_n(1).p == 101);
  CHECK(FieldParams::for_n(100).p == 101);
  CHECK(FieldParams::for_n(101).p == 103);
  CHECK(FieldParams::for_n(1000).p == 1009);
  for (std::size_t n : {5, 99, 500, 4096, 100000}) {
    const Fp p = FieldParams::for_n(n).p;
    CHECK(p > n);
    CHECK(is_prime(p));
    for (Fp q = static_cast<Fp>(std::max<std::size_t>(n + 1, 101)); q < p; ++q) CHECK_FALSE(is_prime(q));
  }
}

TEST_CASE("field inverses and powers") {
  const Fp p = 1009;
  for (Fp a = 1; a < p; a += 37) {
    CHECK(mul_mod(a, inv_mod(a, p), p) == 1);
    CHECK(pow_mod(a, p - 1, p) == 1);
    CHECK(add_mod(a, neg_mod(a, p), p) == 0);
  }
  const auto col = vandermonde_column(3, p, 4);
  CHECK(col == std::vector<Fp>{1, 5, 25, 125, 625, 3125 % 1009});
}

TEST_CASE("syndromes agree with the independent oracle") {
  Rng rng(1);
  const Fp p = 101;
  for (int t = 0; t < 50; ++t) {
    const auto x = random_sparse(rng, 64, 1 + rng.below(6), p);
    const auto mine = syndromes(x, 6, p);
    const auto ref = oracle::syndromes(as_pairs(x), 12, p);
    CHECK(std::vector<oracle::u64>(mine.begin(), mine.end()) == ref);
  }
}

TEST_CASE("Berlekamp-Massey finds the connection polynomial of a geometric sequence") {
  const Fp p = 101;
  std::vector<Fp> s;
  Fp v = 3;
  for (int i = 0; i < 6; ++i) {
    s.push_back(v);
    v = mul_mod(v, 7, p);
  }
  const auto c = berlekamp_massey(s, p);
  REQUIRE(c.size() == 2);
  CHECK(c[0] == 1);
  CHECK(c[1] == p - 7);
}

TEST_CASE("recover_sparse is exact for every sparsity up to r") {
  Rng rng(2);
  for (std::size_t n : {8, 33, 200}) {
    const Fp p = FieldParams::for_n(n).p;
    for (std::uint32_t r = 1; r <= 6; ++r)
      for (std::size_t k = 0; k <= std::min<std::size_t>(r, n); ++k)
        for (int t = 0; t < 20; ++t) {
          const auto x = random_sparse(rng, n, k, p);
          const auto rec = recover_sparse(syndromes(x, r, p), r, p, n);
          REQUIRE(rec.has_value());
          CHECK(*rec == x);
        }
  }
}

TEST_CASE("recovery agrees with brute-force support enumeration") {
  Rng rng(3);
  const std::size_t n = 12;
  const Fp p = FieldParams::for_n(n).p;
  for (int t = 0; t < 40; ++t) {
    const std::size_t k = 1 + rng.below(3);
    const auto x = random_sparse(rng, n, k, p);
    const auto y = oracle::syndromes(as_pairs(x), 2 * k, p);
    const auto all = oracle::brute_force_recover(y, k, p, n);
    REQUIRE(all.size() == 1);
    CHECK(all[0] == as_pairs(x));
  }
}

TEST_CASE("safe_recover rejects vectors beyond the sketch's sparsity") {
  Rng rng(4);
  const std::size_t n = 64;
  const Fp p = FieldParams::for_n(n).p;
  int accepted_wrong = 0;
  for (int t = 0; t < 500; ++t) {
    const std::uint32_t r = 1 + static_cast<std::uint32_t>(rng.below(4));
    const auto x = random_sparse(rng, n, r + 1 + rng.below(6), p);
    RandomMatrix phi(rng.next(), 8, p);
    Measurement m{r, syndromes(x, r, p), phi.apply(x)};
    if (auto rec = safe_recover(m, p, n, phi); rec && !(*rec == x)) ++accepted_wrong;
  }
  CHECK(accepted_wrong == 0);
}

TEST_CASE("verify_candidate checks the random projection") {
  const Fp p = 101;
  RandomMatrix phi(5, 8, p);
  SparseVector x;
  x.entries = {{3, 7}, {10, 1}};
  const auto z = phi.apply(x);
  CHECK(verify_candidate(z, phi, x));
  SparseVector y = x;
  y.entries[0].second = 8;
  CHECK_FALSE(verify_candidate(z, phi, y));
}

TEST_CASE("sketch rates double up to delta") {
  CHECK(sketch_rates(1) == std::vector<std::uint32_t>{1});
  CHECK(sketch_rates(16) == std::vector<std::uint32_t>{1, 2, 4, 8, 16});
  CHECK(sketch_rates(20) == std::vector<std::uint32_t>{1, 2, 4, 8, 16, 32});
}

TEST_CASE("sketch bank recovers full and relative neighborhoods") {
  const auto inst = generate_instance(GeneratorSpec::parse("erdos-renyi:n=80,delta=12,avg=8,seed=9"));
  const Graph g = Graph::from_edges(inst.n, inst.edges);
  const ParamSet params = ParamSet::defaults(Mode::kDesk, inst.n, inst.delta);
  SketchBank bank(inst.n, inst.delta, params, 42);
  for (const Edge& e : inst.edges) bank.update(e);
  const std::size_t k = bank.rate_count() - 1;
  REQUIRE(bank.rate(k) >= inst.delta);
  for (Vertex v = 0; v < inst.n; ++v) {
    if (!bank.sampled(k, v)) continue;
    const auto full = bank.recover(bank.measure_relative(v, k, std::span<const Vertex>{}), k);
    REQUIRE(full.has_value());
    std::vector<Vertex> got;
    for (auto [i, val] : full->entries) {
      CHECK(val == 1);
      got.push_back(i);
    }
    const auto nb = g.neighbors(v);
    CHECK(got == std::vector<Vertex>(nb.begin(), nb.end()));
    const auto none = bank.recover(bank.measure_relative(v, k, nb), k);
    REQUIRE(none.has_value());
    CHECK(none->empty());
  }
}

TEST_CASE("sketch accounting and dump") {
  const ParamSet params = ParamSet::defaults(Mode::kDesk, 50, 8);
  SketchBank bank(50, 8, params, 1);
  bank.update({0, 1});
  std::size_t expect = 0;
  for (std::size_t k = 0; k < bank.rate_count(); ++k)
    expect += bank.sampled_count(k) * (2 * bank.rate(k) + bank.alpha());
  CHECK(bank.stored_elements() == expect);
  CHECK(bank.stored_bits() > 0);
  std::ostringstream os;
  bank.write_dump(os);
  std::size_t words = 4 + bank.rate_count();
  for (std::size_t k = 0; k < bank.rate_count(); ++k)
    words += 1 + bank.sampled_count(k) * (1 + 2 * bank.rate(k) + bank.alpha());
  CHECK(os.str().size() == 8 * words);
}
