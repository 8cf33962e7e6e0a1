#include <algorithm>
#include <cmath>

#include "dcolor/palette.hpp"
#include "dcolor/rng.hpp"
#include "dcolor/simd/kernels.hpp"

namespace dcolor {

namespace {

enum : std::uint64_t { kIdL1 = 1, kIdL2, kIdL3, kIdL4Star, kIdL5, kIdL4 = 1000, kIdL6 = 2000 };

}  // namespace

std::size_t ceil_log2(std::size_t x) {
  std::size_t b = 0;
  while ((std::size_t{1} << b) < x) ++b;
  return std::max<std::size_t>(b, 1);
}

ColorList sample_color_list(std::uint64_t seed, std::uint32_t delta, double rate) {
  ColorList out;
  if (rate <= 0 || delta == 0) return out;
  if (rate >= 1) {
    out.resize(delta);
    for (Color c = 1; c <= delta; ++c) out[c - 1] = c;
    return out;
  }
  Rng rng(seed);
  if (rate >= 0.25) {
    for (Color c = 1; c <= delta; ++c)
      if (rng.bernoulli(rate)) out.push_back(c);
    return out;
  }
  std::uint64_t c = rng.geometric(rate);
  while (c < delta) {
    out.push_back(static_cast<Color>(c + 1));
    std::uint64_t skip = rng.geometric(rate);
    if (skip >= delta) break;
    c += 1 + skip;
  }
  return out;
}

std::size_t PaletteSet::total_list_entries() const {
  std::size_t total = l1.size();
  auto add = [&](const std::vector<ColorList>& lists) {
    for (const auto& l : lists) total += l.size();
  };
  add(l2);
  add(l3);
  add(l4star);
  add(l5);
  for (const auto& bundle : l4) add(bundle);
  for (const auto& bundle : l6) add(bundle);
  return total;
}

const ColorList& list_of(const PaletteSet& pal, ListRef ref, Vertex v) {
  switch (ref.kind) {
    case ListKind::kL2: return pal.l2[v];
    case ListKind::kL3: return pal.l3[v];
    case ListKind::kL4Star: return pal.l4star[v];
    case ListKind::kL4: return pal.l4.at(ref.index)[v];
    case ListKind::kL5: return pal.l5[v];
    case ListKind::kL6: return pal.l6.at(ref.index)[v];
    case ListKind::kL1: break;
  }
  throw InvariantError("L1 is a single color, not a list");
}

PaletteSet sample_palettes(std::size_t n, std::uint32_t delta, const ParamSet& params, std::uint64_t seed) {
  if (delta < 1) throw SpecError("palette sampling needs delta >= 1");
  PaletteSet pal;
  pal.n = n;
  pal.delta = delta;
  pal.words = (delta + 63) / 64;
  const std::uint64_t base = derive_seed(seed, SeedTag::kPalette);
  const double r_bd = params.rate_beta_over_delta(delta);
  const double r_l3 = params.rate_l3(n, delta);
  const double r_q = params.rate_l4i(delta);
  const double r_l6 = params.rate_l6(delta);
  const std::size_t beta = params.beta;

  pal.l1.resize(n);
  pal.l2.resize(n);
  pal.l3.resize(n);
  pal.l4star.resize(n);
  pal.l5.resize(n);
  pal.l4.assign(beta, std::vector<ColorList>(n));
  pal.l6.assign(2 * beta, std::vector<ColorList>(n));
  pal.union_bits.assign(n * pal.words, 0);

  for (Vertex v = 0; v < n; ++v) {
    Rng one(hash_mix(base, kIdL1, v));
    pal.l1[v] = static_cast<Color>(one.below(delta) + 1);
    pal.l2[v] = sample_color_list(hash_mix(base, kIdL2, v), delta, r_bd);
    pal.l3[v] = sample_color_list(hash_mix(base, kIdL3, v), delta, r_l3);
    pal.l4star[v] = sample_color_list(hash_mix(base, kIdL4Star, v), delta, r_bd);
    pal.l5[v] = sample_color_list(hash_mix(base, kIdL5, v), delta, r_bd);
    for (std::size_t i = 0; i < beta; ++i) pal.l4[i][v] = sample_color_list(hash_mix(base, kIdL4 + i, v), delta, r_q);
    for (std::size_t i = 0; i < 2 * beta; ++i)
      pal.l6[i][v] = sample_color_list(hash_mix(base, kIdL6 + i, v), delta, r_l6);

    std::uint64_t* bits = pal.union_bits.data() + v * pal.words;
    auto mark = [&](Color c) { bits[(c - 1) / 64] |= std::uint64_t{1} << ((c - 1) % 64); };
    mark(pal.l1[v]);
    for (const ColorList* l : {&pal.l2[v], &pal.l3[v], &pal.l4star[v], &pal.l5[v]})
      for (Color c : *l) mark(c);
    for (const auto& bundle : pal.l4)
      for (Color c : bundle[v]) mark(c);
    for (const auto& bundle : pal.l6)
      for (Color c : bundle[v]) mark(c);
  }
  return pal;
}

bool conflict_keep(Edge e, const PaletteSet& pal) {
  return simd::active().intersects(pal.union_of(e.u).data(), pal.union_of(e.v).data(), pal.words);
}

ConflictGraph build_conflict_graph(EdgeStream& stream, const PaletteSet& pal) {
  ConflictGraph h(pal.n);
  while (auto e = stream.next()) h.offer(*e, pal);
  h.finalize();
  return h;
}

PaletteSpaceReport palette_space_report(const PaletteSet& pal, const ConflictGraph& h) {
  PaletteSpaceReport rep;
  rep.list_entries = pal.total_list_entries();
  rep.h_edges = h.stored_edges();
  rep.bits = rep.list_entries * ceil_log2(pal.delta) + rep.h_edges * 2 * ceil_log2(pal.n);
  if (pal.n == 0) return rep;
  auto mean = [&](const std::vector<ColorList>& lists) {
    double s = 0;
    for (const auto& l : lists) s += static_cast<double>(l.size());
    return s / static_cast<double>(lists.size());
  };
  rep.mean_list_size["L1"] = 1;
  rep.mean_list_size["L2"] = mean(pal.l2);
  rep.mean_list_size["L3"] = mean(pal.l3);
  rep.mean_list_size["L4*"] = mean(pal.l4star);
  rep.mean_list_size["L5"] = mean(pal.l5);
  double l4 = 0, l6 = 0;
  for (const auto& b : pal.l4) l4 += mean(b);
  for (const auto& b : pal.l6) l6 += mean(b);
  rep.mean_list_size["L4,i (each)"] = pal.l4.empty() ? 0 : l4 / static_cast<double>(pal.l4.size());
  rep.mean_list_size["L6,i (each)"] = pal.l6.empty() ? 0 : l6 / static_cast<double>(pal.l6.size());
  for (Vertex v = 0; v < pal.n; ++v) {
    std::size_t sz = 0;
    for (auto w : pal.union_of(v)) sz += static_cast<std::size_t>(__builtin_popcountll(w));
    ++rep.union_size_histogram[sz];
  }
  return rep;
}

}  // namespace dcolor
