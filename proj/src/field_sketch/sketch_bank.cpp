#include <cmath>
#include <ostream>

#include "dcolor/rng.hpp"
#include "dcolor/simd/kernels.hpp"
#include "dcolor/sketch.hpp"

namespace dcolor {

std::vector<std::uint32_t> sketch_rates(std::uint32_t delta) {
  std::vector<std::uint32_t> rates{1};
  while (rates.back() < delta) rates.push_back(rates.back() * 2);
  return rates;
}

SketchBank::SketchBank(std::size_t n, std::uint32_t delta, const ParamSet& params, std::uint64_t seed)
    : n_(n), p_(FieldParams::for_n(n).p), alpha_(params.alpha), rates_(sketch_rates(std::max(delta, 1U))) {
  levels_.resize(rates_.size());
  const std::uint64_t member_seed = derive_seed(seed, SeedTag::kSketchMembership);
  for (std::size_t k = 0; k < rates_.size(); ++k) {
    Level& lv = levels_[k];
    const std::uint32_t r = rates_[k];
    const double prob = params.rate_vr(r);
    lv.slot.assign(n, -1);
    for (Vertex v = 0; v < n; ++v) {
      if (prob >= 1 || to_unit(hash_mix(member_seed, r, v)) < prob) {
        lv.slot[v] = static_cast<std::int32_t>(lv.members++);
      }
    }
    lv.y.assign(lv.members * 2 * r, 0);
    lv.z.assign(lv.members * alpha_, 0);
    lv.phi = RandomMatrix(derive_seed(seed, SeedTag::kSketchPhiR, r), alpha_, p_);
  }
  scratch_powers_.resize(2 * static_cast<std::size_t>(rates_.back()));
  scratch_col_.resize(alpha_);
}

void SketchBank::add_neighbor(Vertex w, Vertex other, const Fp* powers) {
  const auto& kt = simd::active();
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    Level& lv = levels_[k];
    const std::int32_t s = lv.slot[w];
    if (s < 0) continue;
    const std::size_t len = 2 * static_cast<std::size_t>(rates_[k]);
    kt.add_mod(lv.y.data() + static_cast<std::size_t>(s) * len, powers, len, p_);
    lv.phi.column(other, scratch_col_.data());
    kt.add_mod(lv.z.data() + static_cast<std::size_t>(s) * alpha_, scratch_col_.data(), alpha_, p_);
  }
}

void SketchBank::update(Edge e) {
  auto touched = [&](Vertex w) {
    for (const Level& lv : levels_)
      if (lv.slot[w] >= 0) return true;
    return false;
  };
  if (touched(e.u)) {
    vandermonde_powers(p_, e.v, scratch_powers_.size(), scratch_powers_.data());
    add_neighbor(e.u, e.v, scratch_powers_.data());
  }
  if (touched(e.v)) {
    vandermonde_powers(p_, e.u, scratch_powers_.size(), scratch_powers_.data());
    add_neighbor(e.v, e.u, scratch_powers_.data());
  }
}

std::span<const Fp> SketchBank::y(std::size_t k, Vertex v) const {
  const Level& lv = levels_[k];
  if (lv.slot[v] < 0) throw NotSampledError("vertex " + std::to_string(v) + " not sampled at rate " +
                                            std::to_string(rates_[k]));
  const std::size_t len = 2 * static_cast<std::size_t>(rates_[k]);
  return {lv.y.data() + static_cast<std::size_t>(lv.slot[v]) * len, len};
}

std::span<const Fp> SketchBank::z(std::size_t k, Vertex v) const {
  const Level& lv = levels_[k];
  if (lv.slot[v] < 0) throw NotSampledError("vertex " + std::to_string(v) + " not sampled at rate " +
                                            std::to_string(rates_[k]));
  return {lv.z.data() + static_cast<std::size_t>(lv.slot[v]) * alpha_, alpha_};
}

std::vector<Fp> SketchBank::phi_v_of_set(std::size_t k, std::span<const Vertex> s) const {
  const std::size_t len = 2 * static_cast<std::size_t>(rates_[k]);
  std::vector<Fp> acc(len, 0), col(len);
  const auto& kt = simd::active();
  for (Vertex u : s) {
    vandermonde_powers(p_, u, len, col.data());
    kt.add_mod(acc.data(), col.data(), len, p_);
  }
  return acc;
}

std::vector<Fp> SketchBank::phi_r_of_set(std::size_t k, std::span<const Vertex> s) const {
  std::vector<Fp> acc(alpha_, 0), col(alpha_);
  const auto& kt = simd::active();
  for (Vertex u : s) {
    levels_[k].phi.column(u, col.data());
    kt.add_mod(acc.data(), col.data(), alpha_, p_);
  }
  return acc;
}

Measurement SketchBank::measure_relative(Vertex v, std::size_t k, std::span<const Vertex> s) const {
  return measure_relative(v, k, phi_v_of_set(k, s), phi_r_of_set(k, s));
}

Measurement SketchBank::measure_relative(Vertex v, std::size_t k, std::span<const Fp> phi_v_s,
                                         std::span<const Fp> phi_r_s) const {
  Measurement m;
  m.r = rates_[k];
  auto yy = y(k, v);
  auto zz = z(k, v);
  m.y.assign(yy.begin(), yy.end());
  m.z.assign(zz.begin(), zz.end());
  const auto& kt = simd::active();
  kt.sub_mod(m.y.data(), phi_v_s.data(), m.y.size(), p_);
  kt.sub_mod(m.z.data(), phi_r_s.data(), m.z.size(), p_);
  return m;
}

std::optional<SparseVector> SketchBank::recover(const Measurement& m, std::size_t k) const {
  return safe_recover(m, p_, n_, levels_[k].phi);
}

std::size_t SketchBank::stored_elements() const {
  std::size_t total = 0;
  for (const Level& lv : levels_) total += lv.y.size() + lv.z.size();
  return total;
}

std::size_t SketchBank::stored_bits() const {
  const auto field_bits = static_cast<std::size_t>(std::ceil(std::log2(static_cast<double>(p_))));
  // One 64-bit seed per rate regenerates Φ^R; membership is a hash test.
  return stored_elements() * field_bits + 64 * levels_.size();
}

void SketchBank::write_dump(std::ostream& out) const {
  auto put = [&](std::uint64_t v) {
    char buf[8];
    for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
    out.write(buf, 8);
  };
  put(n_);
  put(p_);
  put(alpha_);
  put(rates_.size());
  for (auto r : rates_) put(r);
  for (std::size_t k = 0; k < levels_.size(); ++k) {
    put(levels_[k].members);
    for (Vertex v = 0; v < n_; ++v) {
      if (levels_[k].slot[v] < 0) continue;
      put(v);
      for (Fp x : y(k, v)) put(x);
      for (Fp x : z(k, v)) put(x);
    }
  }
}

}  // namespace dcolor
