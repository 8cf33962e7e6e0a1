#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dcolor {

enum class Mode { kPaper, kDesk };

Mode parse_mode(const std::string& s);
const char* mode_name(Mode m);

// Constants of the collection algorithms and the coloring phases. Rates are
// computed by the accessors and clamped to [0, 1].
struct ParamSet {
  Mode mode = Mode::kDesk;
  std::uint32_t alpha = 8;  // activation is 1/alpha; also the row count of Φ^R
  std::uint32_t beta = 4;
  double eps = 1.0 / 40;
  double holey_mult = 10;  // holey iff t >= holey_mult * eps * delta
  double gamma = 2;        // decomposition sample sizes
  double c_q = 0.35;      // L4,i rate q = c_q / (sqrt(eps) * delta)
  double c_ell = 10;       // ell = ceil(t / (c_ell * eps * delta))
  double c_l3 = 100;       // L3 rate = c_l3 * alpha * log n / (eps^2 * delta)
  std::uint32_t delta0 = 8;          // below this, color offline
  std::size_t nsample_target = 0;    // 0: gamma * eps^-2 * log n

  static ParamSet defaults(Mode mode, std::size_t n, std::uint32_t delta);

  // Applies "key=value" overrides; unknown keys throw SpecError.
  void apply_overrides(const std::map<std::string, std::string>& kv);

  // Throws SpecError when the set cannot drive the pipeline for (n, delta).
  void validate(std::size_t n, std::uint32_t delta) const;

  double log_n(std::size_t n) const;

  double rate_beta_over_delta(std::uint32_t delta) const;  // L2, L4*, L5
  double rate_l3(std::size_t n, std::uint32_t delta) const;
  double rate_l4i(std::uint32_t delta) const;               // q
  double rate_l6(std::uint32_t delta) const;                // beta^2 / delta, also I_sample
  double rate_sample(std::size_t n, std::uint32_t delta) const;
  double rate_vr(std::uint32_t r) const;                    // V_r membership
  std::size_t nsample_size(std::size_t n) const;

  double holey_threshold(std::uint32_t delta) const;
  std::size_t ell(std::size_t t, std::uint32_t delta) const;
  // Friend iff X exceeds this. Equals 1.5*beta when beta^2/delta <= 1.
  double friend_threshold(std::uint32_t delta) const;

  // Names of rates whose raw value exceeded 1 before clamping.
  std::vector<std::string> clamped_rates(std::size_t n, std::uint32_t delta) const;
};

double clamp_rate(double r);

}  // namespace dcolor
