#include <algorithm>
#include <charconv>
#include <set>
#include <unordered_set>

#include "dcolor/generators.hpp"
#include "dcolor/rng.hpp"

namespace dcolor {

namespace {

class Builder {
 public:
  Vertex add_vertices(std::size_t k) {
    Vertex first = static_cast<Vertex>(n_);
    n_ += k;
    degree_.resize(n_, 0);
    return first;
  }

  void add_edge(Vertex u, Vertex v) {
    if (u == v) throw InvariantError("generator produced a self-loop");
    if (u > v) std::swap(u, v);
    if (!keys_.insert(key(u, v)).second) return;
    ++degree_[u];
    ++degree_[v];
  }

  void remove_edge(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    if (keys_.erase(key(u, v)) == 0) throw InvariantError("generator removed a missing edge");
    --degree_[u];
    --degree_[v];
  }

  bool has_edge(Vertex u, Vertex v) const {
    if (u > v) std::swap(u, v);
    return keys_.count(key(u, v)) != 0;
  }

  void add_clique(Vertex first, std::size_t size) {
    for (Vertex a = first; a < first + size; ++a)
      for (Vertex b = a + 1; b < first + size; ++b) add_edge(a, b);
  }

  std::uint32_t degree(Vertex v) const { return degree_[v]; }
  std::size_t n() const { return n_; }

  GeneratedInstance finish(std::string family, std::vector<PlantedBlock> blocks) const {
    GeneratedInstance out;
    out.family = std::move(family);
    out.n = n_;
    out.edges.reserve(keys_.size());
    for (std::uint64_t k : keys_) out.edges.push_back({static_cast<Vertex>(k >> 32), static_cast<Vertex>(k)});
    out.delta = 0;
    for (auto d : degree_) out.delta = std::max(out.delta, d);
    for (auto& b : blocks) std::sort(b.members.begin(), b.members.end());
    out.blocks = std::move(blocks);
    return out;
  }

 private:
  static std::uint64_t key(Vertex u, Vertex v) { return static_cast<std::uint64_t>(u) << 32 | v; }

  std::size_t n_ = 0;
  std::set<std::uint64_t> keys_;
  std::vector<std::uint32_t> degree_;
};

std::vector<Vertex> range_of(Vertex first, std::size_t size) {
  std::vector<Vertex> v(size);
  for (std::size_t i = 0; i < size; ++i) v[i] = first + static_cast<Vertex>(i);
  return v;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw SpecError(what);
}

PlantedBlock clique_minus_edge_block(Builder& b, std::uint32_t delta, Rng& rng) {
  Vertex first = b.add_vertices(delta + 1);
  b.add_clique(first, delta + 1);
  Vertex x = first + static_cast<Vertex>(rng.below(delta + 1));
  Vertex y = first + static_cast<Vertex>(rng.below(delta));
  if (y >= x) ++y;
  b.remove_edge(x, y);
  return {range_of(first, delta + 1), "critical", std::nullopt};
}

// K_{Δ+1} with `holes` planted non-edges on a cycle through all but one
// vertex; one vertex keeps full degree so the block reaches degree Δ.
PlantedBlock holey_clique_block(Builder& b, std::uint32_t delta, std::uint32_t holes, Rng& rng) {
  Vertex first = b.add_vertices(delta + 1);
  b.add_clique(first, delta + 1);
  std::vector<Vertex> perm = range_of(first, delta + 1);
  rng.shuffle(perm.begin(), perm.end());
  perm.pop_back();
  std::vector<std::pair<Vertex, Vertex>> cycle;
  for (std::size_t i = 0; i < perm.size(); i += 2) cycle.emplace_back(perm[i], perm[(i + 1) % perm.size()]);
  for (std::size_t i = 1; i < perm.size(); i += 2) cycle.emplace_back(perm[i], perm[(i + 1) % perm.size()]);
  std::uint32_t removed = 0;
  for (auto [x, y] : cycle) {
    if (removed == holes) break;
    if (x == y || !b.has_edge(x, y)) continue;
    b.remove_edge(x, y);
    ++removed;
  }
  require(removed == holes, "holey-clique: too many holes for delta");
  bool holey = holes > 0;
  return {range_of(first, delta + 1), holey && holes > 1 ? "holey-critical" : "critical", std::nullopt};
}

PlantedBlock lonely_clique_block(Builder& b, std::uint32_t delta) {
  Vertex k = b.add_vertices(delta);
  Vertex p = b.add_vertices(delta);
  b.add_clique(k, delta);
  for (std::uint32_t i = 0; i < delta; ++i) {
    b.add_edge(k + i, p + i);
    if (i + 1 < delta) b.add_edge(p + i, p + i + 1);
  }
  return {range_of(k, delta), "lonely-small", std::nullopt};
}

// Δ-clique whose outside neighbors are two shared vertices o1, o2, each seeing
// half of the clique and both attached to the same two tail vertices.
PlantedBlock hard_phase6_block(Builder& b, std::uint32_t delta) {
  Vertex k = b.add_vertices(delta);
  Vertex t = b.add_vertices(2);
  Vertex o = b.add_vertices(2);
  b.add_clique(k, delta);
  const std::uint32_t half = (delta + 1) / 2;
  for (std::uint32_t i = 0; i < delta; ++i) b.add_edge(k + i, i < half ? o : o + 1);
  for (Vertex ti = t; ti < t + 2; ++ti) {
    b.add_edge(ti, o);
    b.add_edge(ti, o + 1);
  }
  return {range_of(k, delta), "friendly-small", o};
}

PlantedBlock large_clique_block(Builder& b, std::uint32_t delta, Rng& rng) {
  Vertex first = b.add_vertices(delta + 2);
  b.add_clique(first, delta + 2);
  std::vector<Vertex> perm = range_of(first, delta + 2);
  rng.shuffle(perm.begin(), perm.end());
  for (std::size_t i = 0; i + 1 < perm.size(); i += 2) b.remove_edge(perm[i], perm[i + 1]);
  return {range_of(first, delta + 2), "large", std::nullopt};
}

GeneratedInstance random_regular(std::size_t n, std::uint32_t delta, Rng& rng) {
  require(delta >= 1 && delta < n, "random-regular: need 1 <= delta < n");
  require((n * delta) % 2 == 0, "random-regular: n*delta must be even");
  for (int attempt = 0; attempt < 200; ++attempt) {
    Builder b;
    b.add_vertices(n);
    std::vector<Vertex> stubs;
    stubs.reserve(n * delta);
    for (Vertex v = 0; v < n; ++v)
      for (std::uint32_t i = 0; i < delta; ++i) stubs.push_back(v);
    bool stuck = false;
    while (!stubs.empty() && !stuck) {
      bool placed = false;
      for (int tries = 0; tries < 64 && !placed; ++tries) {
        std::size_t i = rng.below(stubs.size());
        std::size_t j = rng.below(stubs.size());
        Vertex u = stubs[i], v = stubs[j];
        if (i == j || u == v || b.has_edge(u, v)) continue;
        b.add_edge(u, v);
        if (i < j) std::swap(i, j);
        stubs[i] = stubs.back();
        stubs.pop_back();
        stubs[j] = stubs.back();
        stubs.pop_back();
        placed = true;
      }
      if (!placed) stuck = true;
    }
    if (!stuck) return b.finish("random-regular", {});
  }
  throw SpecError("random-regular: pairing did not converge");
}

GeneratedInstance erdos_renyi(std::size_t n, std::uint32_t cap, double avg, Rng& rng) {
  require(n >= 2, "erdos-renyi: need n >= 2");
  Builder b;
  b.add_vertices(n);
  if (avg <= 0) avg = cap / 2.0;
  const double p = std::min(1.0, avg / static_cast<double>(n - 1));
  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  std::uint64_t idx = rng.geometric(p);
  Vertex u = 0;
  std::uint64_t row_start = 0;
  while (idx < pairs && p > 0) {
    while (idx >= row_start + (n - 1 - u)) {
      row_start += n - 1 - u;
      ++u;
    }
    Vertex v = static_cast<Vertex>(u + 1 + (idx - row_start));
    if (b.degree(u) < cap && b.degree(v) < cap) b.add_edge(u, v);
    std::uint64_t skip = rng.geometric(p);
    if (skip >= pairs) break;
    idx += 1 + skip;
  }
  return b.finish("erdos-renyi", {});
}

}  // namespace

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
  GeneratorSpec spec;
  auto colon = text.find(':');
  spec.family = text.substr(0, colon);
  require(!spec.family.empty(), "generator spec: missing family");
  if (colon == std::string::npos) return spec;
  std::string rest = text.substr(colon + 1);
  std::size_t pos = 0;
  while (pos < rest.size()) {
    auto comma = rest.find(',', pos);
    if (comma == std::string::npos) comma = rest.size();
    std::string item = rest.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) continue;
    auto eq = item.find('=');
    require(eq != std::string::npos && eq > 0, "generator spec: expected key=val, got '" + item + "'");
    spec.values[item.substr(0, eq)] = item.substr(eq + 1);
  }
  return spec;
}

std::optional<std::uint64_t> GeneratorSpec::get(std::initializer_list<const char*> keys) const {
  for (const char* k : keys) {
    auto it = values.find(k);
    if (it == values.end()) continue;
    std::uint64_t out = 0;
    const std::string& s = it->second;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
    require(ec == std::errc() && ptr == s.data() + s.size(), std::string("generator spec: bad integer for ") + k);
    return out;
  }
  return std::nullopt;
}

std::optional<double> GeneratorSpec::get_real(std::initializer_list<const char*> keys) const {
  for (const char* k : keys) {
    auto it = values.find(k);
    if (it == values.end()) continue;
    try {
      std::size_t used = 0;
      double d = std::stod(it->second, &used);
      require(used == it->second.size(), std::string("generator spec: bad number for ") + k);
      return d;
    } catch (const std::logic_error&) {
      throw SpecError(std::string("generator spec: bad number for ") + k);
    }
  }
  return std::nullopt;
}

GeneratedInstance generate_instance(const GeneratorSpec& spec) {
  static const std::set<std::string> known = {"delta", "Δ", "d",  "count", "pairs", "blocks", "k",
                                              "seed",  "n",      "holes", "t",  "avg"};
  for (const auto& [k, v] : spec.values) {
    (void)v;
    require(known.count(k) != 0, "generator spec: unknown key '" + k + "'");
  }
  FamilyArgs a;
  a.family = spec.family;
  a.delta = static_cast<std::uint32_t>(spec.get({"delta", "Δ", "d"}).value_or(0));
  a.count = static_cast<std::uint32_t>(spec.get({"count", "pairs", "blocks", "k"}).value_or(1));
  a.seed = spec.get({"seed"}).value_or(0);
  a.n = spec.get({"n"}).value_or(0);
  a.holes = static_cast<std::uint32_t>(spec.get({"holes", "t"}).value_or(0));
  a.avg = spec.get_real({"avg"}).value_or(0);
  return generate_instance(a);
}

GeneratedInstance generate_instance(const FamilyArgs& a) {
  Rng rng(derive_seed(a.seed, SeedTag::kGenerator));
  const std::uint32_t d = a.delta;
  const std::string& f = a.family;
  require(a.count >= 1, "generator: count must be >= 1");
  auto needs_delta = [&](std::uint32_t lo) {
    require(d >= lo, f + ": delta must be at least " + std::to_string(lo));
  };

  Builder b;
  std::vector<PlantedBlock> blocks;
  if (f == "clique-minus-edge") {
    needs_delta(3);
    for (std::uint32_t i = 0; i < a.count; ++i) blocks.push_back(clique_minus_edge_block(b, d, rng));
  } else if (f == "clique") {
    needs_delta(1);
    for (std::uint32_t i = 0; i < a.count; ++i) {
      Vertex first = b.add_vertices(d + 1);
      b.add_clique(first, d + 1);
      blocks.push_back({range_of(first, d + 1), "clique", std::nullopt});
    }
  } else if (f == "clique-pairs") {
    needs_delta(3);
    for (std::uint32_t i = 0; i < a.count; ++i) {
      Vertex A = b.add_vertices(d + 1);
      Vertex B = b.add_vertices(d + 1);
      b.add_clique(A, d + 1);
      b.add_clique(B, d + 1);
      Vertex u1 = A + static_cast<Vertex>(rng.below(d + 1));
      Vertex v1 = A + static_cast<Vertex>(rng.below(d));
      if (v1 >= u1) ++v1;
      Vertex u2 = B + static_cast<Vertex>(rng.below(d + 1));
      Vertex v2 = B + static_cast<Vertex>(rng.below(d));
      if (v2 >= u2) ++v2;
      b.remove_edge(u1, v1);
      b.remove_edge(u2, v2);
      b.add_edge(u1, v2);
      b.add_edge(u2, v1);
      blocks.push_back({range_of(A, d + 1), "critical", std::nullopt});
      blocks.push_back({range_of(B, d + 1), "critical", std::nullopt});
    }
  } else if (f == "lonely-clique") {
    needs_delta(3);
    for (std::uint32_t i = 0; i < a.count; ++i) blocks.push_back(lonely_clique_block(b, d));
  } else if (f == "hard-phase6") {
    needs_delta(4);
    for (std::uint32_t i = 0; i < a.count; ++i) blocks.push_back(hard_phase6_block(b, d));
  } else if (f == "holey-clique") {
    needs_delta(3);
    std::uint32_t holes = a.holes == 0 ? d : a.holes;
    require(holes <= d, "holey-clique: holes must be <= delta");
    for (std::uint32_t i = 0; i < a.count; ++i) blocks.push_back(holey_clique_block(b, d, holes, rng));
  } else if (f == "large-clique") {
    needs_delta(2);
    require(d % 2 == 0, "large-clique: delta must be even");
    for (std::uint32_t i = 0; i < a.count; ++i) blocks.push_back(large_clique_block(b, d, rng));
  } else if (f == "mixed") {
    needs_delta(4);
    blocks.push_back(lonely_clique_block(b, d));
    blocks.push_back(holey_clique_block(b, d, d, rng));
    blocks.push_back(clique_minus_edge_block(b, d, rng));
    blocks.push_back(hard_phase6_block(b, d));
  } else if (f == "random-regular") {
    require(a.n > 0, "random-regular: n required");
    return random_regular(a.n, d, rng);
  } else if (f == "erdos-renyi") {
    require(a.n > 0, "erdos-renyi: n required");
    needs_delta(1);
    return erdos_renyi(a.n, d, a.avg, rng);
  } else {
    throw SpecError("unknown generator family '" + f + "'");
  }
  GeneratedInstance inst = b.finish(f, std::move(blocks));
  require(inst.delta == d, f + ": realized max degree differs from delta");
  return inst;
}

}  // namespace dcolor
