#include "dcolor/params.hpp"

#include <cmath>
#include <stdexcept>

#include "dcolor/types.hpp"

namespace dcolor {

Mode parse_mode(const std::string& s) {
  if (s == "desk") return Mode::kDesk;
  if (s == "paper") return Mode::kPaper;
  throw SpecError("unknown mode '" + s + "' (expected desk or paper)");
}

const char* mode_name(Mode m) { return m == Mode::kDesk ? "desk" : "paper"; }

double clamp_rate(double r) {
  if (!(r > 0)) return 0;
  return r > 1 ? 1 : r;
}

ParamSet ParamSet::defaults(Mode mode, std::size_t n, std::uint32_t delta) {
  ParamSet p;
  p.mode = mode;
  const double nn = static_cast<double>(std::max<std::size_t>(n, 2));
  if (mode == Mode::kPaper) {
    const double lg = std::ceil(std::log2(nn));
    p.alpha = 1000;
    p.beta = static_cast<std::uint32_t>(100 * lg);
    p.eps = 1e-8 / std::log2(nn);
    p.holey_mult = 1e7;
    p.gamma = 2;
    p.c_q = 0.01;
    p.c_ell = 1e6;
  } else {
    p.alpha = 8;
    p.beta = static_cast<std::uint32_t>(std::max(4.0, std::ceil(2 * std::log(nn))));
    p.eps = delta == 0 ? 1.0 / 40 : std::min(1.0 / 40, 4.0 / delta);
  }
  return p;
}

void ParamSet::apply_overrides(const std::map<std::string, std::string>& kv) {
  for (const auto& [k, v] : kv) {
    double d = 0;
    try {
      std::size_t used = 0;
      d = std::stod(v, &used);
      if (used != v.size()) throw std::invalid_argument(v);
    } catch (const std::logic_error&) {
      throw SpecError("parameter " + k + ": not a number: " + v);
    }
    if (k == "alpha") alpha = static_cast<std::uint32_t>(d);
    else if (k == "beta") beta = static_cast<std::uint32_t>(d);
    else if (k == "eps") eps = d;
    else if (k == "holey_mult") holey_mult = d;
    else if (k == "gamma") gamma = d;
    else if (k == "c_q") c_q = d;
    else if (k == "c_ell") c_ell = d;
    else if (k == "c_l3") c_l3 = d;
    else if (k == "delta0") delta0 = static_cast<std::uint32_t>(d);
    else if (k == "nsample") nsample_target = static_cast<std::size_t>(d);
    else throw SpecError("unknown parameter '" + k + "'");
  }
}

void ParamSet::validate(std::size_t n, std::uint32_t delta) const {
  (void)n;
  if (alpha < 1) throw SpecError("alpha must be >= 1");
  if (!(eps > 0) || eps >= 1) throw SpecError("eps must lie in (0, 1)");
  if (!(gamma > 0) || !(c_q > 0) || !(c_ell > 0) || !(c_l3 > 0) || !(holey_mult > 0)) {
    throw SpecError("constants must be positive");
  }
  if (mode == Mode::kDesk) {
    if (eps > 1.0 / 40 + 1e-12) throw SpecError("desk mode requires eps <= 1/40");
    if (beta < 2) throw SpecError("desk mode requires beta >= 2");
    if (delta > 0 && 5 * eps * delta < 1) throw SpecError("desk mode requires 5*eps*delta >= 1");
  } else if (beta < 1) {
    throw SpecError("beta must be >= 1");
  }
}

double ParamSet::log_n(std::size_t n) const {
  const double nn = static_cast<double>(std::max<std::size_t>(n, 2));
  return mode == Mode::kPaper ? std::log2(nn) : std::log(nn);
}

double ParamSet::rate_beta_over_delta(std::uint32_t delta) const {
  return clamp_rate(static_cast<double>(beta) / delta);
}

double ParamSet::rate_l3(std::size_t n, std::uint32_t delta) const {
  return clamp_rate(c_l3 * alpha * log_n(n) / (eps * eps * delta));
}

double ParamSet::rate_l4i(std::uint32_t delta) const {
  return clamp_rate(c_q / (std::sqrt(eps) * delta));
}

double ParamSet::rate_l6(std::uint32_t delta) const {
  return clamp_rate(static_cast<double>(beta) * beta / delta);
}

double ParamSet::rate_sample(std::size_t n, std::uint32_t delta) const {
  return clamp_rate(gamma * log_n(n) / delta);
}

double ParamSet::rate_vr(std::uint32_t r) const { return clamp_rate(beta / (eps * r)); }

std::size_t ParamSet::nsample_size(std::size_t n) const {
  if (nsample_target > 0) return nsample_target;
  double t = std::ceil(gamma * log_n(n) / (eps * eps));
  return t > 1e12 ? static_cast<std::size_t>(1e12) : static_cast<std::size_t>(t);
}

double ParamSet::holey_threshold(std::uint32_t delta) const { return holey_mult * eps * delta; }

std::size_t ParamSet::ell(std::size_t t, std::uint32_t delta) const {
  double v = std::ceil(static_cast<double>(t) / (c_ell * eps * delta));
  return v < 1 ? 1 : static_cast<std::size_t>(v);
}

double ParamSet::friend_threshold(std::uint32_t delta) const {
  // The tester samples each neighbor with rate rho; 1.5*beta is rho * (1.5*delta/beta)
  // before clamping, so the clamped rate keeps the same neighbor-count cut.
  return 1.5 * rate_l6(delta) * delta / beta;
}

std::vector<std::string> ParamSet::clamped_rates(std::size_t n, std::uint32_t delta) const {
  std::vector<std::string> out;
  auto check = [&](const char* name, double raw) {
    if (raw > 1) out.emplace_back(name);
  };
  check("L2/L4*/L5 beta/delta", static_cast<double>(beta) / delta);
  check("L3", c_l3 * alpha * log_n(n) / (eps * eps * delta));
  check("L4,i q", c_q / (std::sqrt(eps) * delta));
  check("L6,i and I_sample beta^2/delta", static_cast<double>(beta) * beta / delta);
  check("SAMPLE gamma*log n/delta", gamma * log_n(n) / delta);
  return out;
}

}  // namespace dcolor
