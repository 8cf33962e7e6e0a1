#include <algorithm>

#include "dcolor/decomposition.hpp"

namespace dcolor {

const char* size_class_name(SizeClass c) {
  switch (c) {
    case SizeClass::kSmall: return "small";
    case SizeClass::kCritical: return "critical";
    case SizeClass::kLarge: return "large";
  }
  return "?";
}

SizeClass classify_size(std::size_t k, std::uint32_t delta) {
  if (k <= delta) return SizeClass::kSmall;
  if (k == static_cast<std::size_t>(delta) + 1) return SizeClass::kCritical;
  return SizeClass::kLarge;
}

TesterVerdict friend_stranger_test(std::span<const Vertex> k, std::span<const Vertex> i_sample_v, double threshold) {
  const auto x = static_cast<double>(intersection_size(k, i_sample_v));
  return x > threshold ? TesterVerdict::kFriend : TesterVerdict::kStranger;
}

void classify_sizes(Decomposition& dec, const Graph& t_oracle, const ParamSet& params, std::uint32_t delta) {
  for (auto& c : dec.cliques) {
    c.size_class = classify_size(c.members.size(), delta);
    c.non_edges = count_non_edges(c.members, t_oracle);
    c.holey = static_cast<double>(c.non_edges) >= params.holey_threshold(delta);
  }
}

void classify_friendly_lonely(Decomposition& dec, const DecompSamples& samples, const ParamSet& params,
                              std::uint32_t delta) {
  const double threshold = params.friend_threshold(delta);
  const std::size_t n = samples.i_sample.size();
  std::vector<std::uint32_t> hits(n, 0);
  std::vector<Vertex> touched;
  // rev[u]: vertices whose I_sample contains u.
  std::vector<std::vector<Vertex>> rev(n);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex u : samples.i_sample[v]) rev[u].push_back(v);
  for (std::size_t ci = 0; ci < dec.cliques.size(); ++ci) {
    auto& c = dec.cliques[ci];
    c.friendly = false;
    c.witness.reset();
    c.witness_hits = 0;
    if (c.size_class != SizeClass::kSmall) continue;
    for (Vertex u : c.members)
      for (Vertex v : rev[u]) {
        if (dec.clique_of[v] == static_cast<std::int32_t>(ci)) continue;
        if (hits[v]++ == 0) touched.push_back(v);
      }
    std::sort(touched.begin(), touched.end());
    for (Vertex v : touched) {
      const auto x = static_cast<std::size_t>(intersection_size(c.members, samples.i_sample[v]));
      if (static_cast<double>(x) > threshold && x > c.witness_hits) {
        c.witness = v;
        c.witness_hits = x;
      }
      hits[v] = 0;
    }
    touched.clear();
    c.friendly = c.witness.has_value();
  }
}

}  // namespace dcolor
