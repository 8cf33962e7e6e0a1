#include <json.hpp>

#include "dcolor/pipeline.hpp"

namespace dcolor {

namespace {

nlohmann::json space_json(const SpaceReport& s) {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [k, v] : s.bits) j[k] = v;
  j["total"] = s.total();
  return j;
}

nlohmann::json params_json(const ParamSet& p) {
  return {{"alpha", p.alpha}, {"beta", p.beta},   {"eps", p.eps},       {"holey_mult", p.holey_mult},
          {"gamma", p.gamma}, {"c_q", p.c_q},     {"c_ell", p.c_ell},   {"c_l3", p.c_l3},
          {"delta0", p.delta0}, {"nsample", p.nsample_target}};
}

}  // namespace

std::string report_json(const RunReport& r, int indent) {
  nlohmann::json j;
  j["status"] = r.status;
  if (!r.message.empty()) j["message"] = r.message;
  j["path"] = r.path;
  j["mode"] = mode_name(r.mode);
  j["n"] = r.n;
  j["m"] = r.m;
  j["delta"] = r.delta;
  j["passes"] = r.passes;
  j["colors_used"] = r.colors_used;
  if (r.status != "not-colorable") j["params"] = params_json(r.params);
  j["clamped_rates"] = r.clamped_rates;
  j["chosen_attempt"] = r.chosen ? nlohmann::json(*r.chosen) : nlohmann::json(nullptr);
  j["space_bits_total"] = space_json(r.space_total);
  j["space_note"] = "shadow copy excluded";
  auto& atts = j["attempts"] = nlohmann::json::array();
  for (const auto& a : r.attempts) {
    nlohmann::json ja{{"index", a.index}, {"seed", a.seed}, {"ok", a.ok}, {"stage", a.stage},
                      {"space_bits", space_json(a.space)}};
    if (!a.error.empty()) ja["error"] = a.error;
    if (a.failure) ja["failure"] = {{"phase", a.failure->phase}, {"clique", a.failure->clique},
                                    {"vertex", a.failure->vertex}, {"reason", a.failure->reason}};
    if (a.stage != "unused") {
      ja["sparse_vertices"] = a.sparse_vertices;
      auto& cl = ja["cliques"] = nlohmann::json::array();
      for (const auto& c : a.cliques) {
        nlohmann::json jc{{"first", c.first_member}, {"size", c.size},           {"class", size_class_name(c.size_class)},
                          {"t", c.non_edges},        {"holey", c.holey},         {"friendly", c.friendly},
                          {"phase", c.phase},        {"best_matching", c.best_matching}, {"ell", c.ell}};
        if (c.witness) jc["witness"] = *c.witness;
        cl.push_back(jc);
      }
      if (!a.vertices_per_phase.empty()) {
        nlohmann::json vp = nlohmann::json::object();
        static const char* names[] = {"none", "1", "2", "3", "4", "5", "6", "offline"};
        for (std::size_t i = 1; i < a.vertices_per_phase.size() && i < 8; ++i)
          if (a.vertices_per_phase[i]) vp[names[i]] = a.vertices_per_phase[i];
        ja["vertices_per_phase"] = vp;
      }
    }
    atts.push_back(ja);
  }
  return j.dump(indent);
}

}  // namespace dcolor
