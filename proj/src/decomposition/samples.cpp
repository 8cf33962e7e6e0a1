#include <cmath>

#include "dcolor/decomposition.hpp"
#include "dcolor/palette.hpp"
#include "dcolor/rng.hpp"

namespace dcolor {

std::size_t DecompSamples::stored_entries() const {
  std::size_t total = 0;
  for (std::size_t v = 0; v < sample_nbhd.size(); ++v) {
    total += sample_nbhd[v].size() + n_sample[v].size() + i_sample[v].size();
  }
  return total;
}

std::size_t DecompSamples::stored_bits() const {
  return stored_entries() * ceil_log2(n_sample.size()) + in_sample.size();
}

SampleCollector::SampleCollector(std::size_t n, std::uint32_t delta, const ParamSet& params, std::uint64_t seed)
    : seen_(n, 0),
      i_rate_(params.rate_l6(std::max(delta, 1U))),
      nseed_(derive_seed(seed, SeedTag::kNSample)),
      iseed_(derive_seed(seed, SeedTag::kISample)) {
  s_.in_sample.assign(n, 0);
  s_.sample_nbhd.resize(n);
  s_.n_sample.resize(n);
  s_.i_sample.resize(n);
  s_.target = params.nsample_size(n);
  const double prob = params.rate_sample(n, std::max(delta, 1U));
  const std::uint64_t sseed = derive_seed(seed, SeedTag::kSample);
  for (Vertex v = 0; v < n; ++v) {
    s_.in_sample[v] = prob >= 1 || to_unit(hash_mix(sseed, v)) < prob;
  }
}

void SampleCollector::arrive(Vertex w, Vertex other) {
  if (s_.in_sample[w]) s_.sample_nbhd[w].push_back(other);
  const std::uint32_t k = ++seen_[w];
  auto& res = s_.n_sample[w];
  if (res.size() < s_.target) {
    res.push_back(other);
  } else {
    // Classic reservoir step: the k-th arrival replaces a uniform slot w.p. target/k.
    const std::uint64_t j = hash_mix(nseed_, w, k) % k;
    if (j < s_.target) res[j] = other;
  }
  if (i_rate_ >= 1 || to_unit(hash_mix(iseed_, w, other)) < i_rate_) s_.i_sample[w].push_back(other);
}

void SampleCollector::update(Edge e) {
  arrive(e.u, e.v);
  arrive(e.v, e.u);
}

DecompSamples SampleCollector::finish() {
  for (auto* lists : {&s_.sample_nbhd, &s_.n_sample, &s_.i_sample})
    for (auto& l : *lists) std::sort(l.begin(), l.end());
  return std::move(s_);
}

DecompSamples collect_samples(EdgeStream& stream, std::uint32_t delta, const ParamSet& params, std::uint64_t seed) {
  SampleCollector c(stream.n(), delta, params, seed);
  while (auto e = stream.next()) c.update(*e);
  return c.finish();
}

}  // namespace dcolor
