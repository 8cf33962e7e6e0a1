// dcolor: batch front-end for the streaming Δ-coloring engine.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "dcolor/generators.hpp"
#include "dcolor/pipeline.hpp"
#include "dcolor/rng.hpp"

using namespace dcolor;

namespace {

enum Exit { kOk = 0, kVerifyFail = 1, kNotColorable = 2, kPipelineFail = 3, kUsage = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw StreamError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw StreamError("cannot write " + path);
  out << text;
}

std::map<std::string, std::string> parse_params(const std::vector<std::string>& kvs) {
  std::map<std::string, std::string> out;
  for (const auto& kv : kvs) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw SpecError("--param expects key=value, got '" + kv + "'");
    out[kv.substr(0, eq)] = kv.substr(eq + 1);
  }
  return out;
}

struct InputOpts {
  std::string input;
  std::string gen;
  std::uint64_t seed = 1;
};

EdgeSource load_source(const InputOpts& o) {
  if (!o.input.empty() == !o.gen.empty()) throw SpecError("exactly one of --input and --gen is required");
  const std::uint64_t shuffle = derive_seed(o.seed, SeedTag::kShuffle);
  if (!o.input.empty()) return EdgeSource::from_file(o.input, shuffle);
  auto inst = generate_instance(GeneratorSpec::parse(o.gen));
  EdgeSource src = EdgeSource::from_edges(inst.n, inst.edges, shuffle);
  src.declared_delta = inst.delta;
  return src;
}

int cmd_color(const InputOpts& io, const RunConfig& cfg, const std::string& out, const std::string& report) {
  EdgeSource src = load_source(io);
  RunOutput res = run_color(src, cfg);
  const std::string json = report_json(res.report);
  if (!report.empty()) write_file(report, json + "\n");
  if (res.report.status == "not-colorable") {
    std::cerr << res.report.message << "\n";
    return kNotColorable;
  }
  if (res.report.status != "ok") {
    std::cerr << "pipeline failed after " << res.report.attempts.size() << " attempts: " << res.report.message
              << "\n";
    return kPipelineFail;
  }
  const std::string text = format_coloring(res.coloring);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_file(out, text);
  }
  std::cerr << "colored n=" << res.report.n << " with " << res.report.colors_used << " of " << res.report.delta
            << " colors (" << res.report.path << ", " << res.report.passes << " passes)\n";
  return kOk;
}

int cmd_verify(const std::string& graph, const std::string& coloring, std::optional<std::uint32_t> delta) {
  EdgeSource src = EdgeSource::from_file(graph, 0);
  std::uint32_t d = 0;
  if (delta) {
    d = *delta;
  } else {
    EdgeStream s = src.open();
    d = degree_census(s).second.delta;
  }
  const auto col = parse_coloring(read_file(coloring), src.n());
  EdgeStream s = src.open();
  if (auto bad = verify_coloring(s, col, d)) {
    std::cerr << "invalid: " << *bad << "\n";
    return kVerifyFail;
  }
  std::cout << "ok: proper " << d << "-coloring of " << src.n() << " vertices\n";
  return kOk;
}

int cmd_gen(const std::string& spec, const std::string& out) {
  const auto inst = generate_instance(GeneratorSpec::parse(spec));
  const std::string text = format_edge_list(inst.n, inst.edges);
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_file(out, text);
  }
  std::cerr << inst.family << ": n=" << inst.n << " m=" << inst.edges.size() << " delta=" << inst.delta << "\n";
  return kOk;
}

int cmd_report(const std::string& run) {
  const auto j = nlohmann::json::parse(read_file(run));
  std::cout << "status: " << j.value("status", "?") << "\n";
  if (j.contains("message")) std::cout << "message: " << j["message"].get<std::string>() << "\n";
  std::cout << "n=" << j.value("n", 0) << " m=" << j.value("m", 0) << " delta=" << j.value("delta", 0)
            << " passes=" << j.value("passes", 0) << " path=" << j.value("path", "") << "\n";
  if (j.contains("space_bits_total")) {
    std::cout << "stored bits (shadow copy excluded):\n";
    for (const auto& [k, v] : j["space_bits_total"].items())
      if (k != "total") std::cout << "  " << k << ": " << v << "\n";
    std::cout << "  total: " << j["space_bits_total"].value("total", 0) << "\n";
  }
  if (j.contains("attempts")) {
    std::size_t ok = 0;
    for (const auto& a : j["attempts"]) ok += a.value("ok", false);
    std::cout << "attempts: " << j["attempts"].size() << " collected, " << ok << " succeeded\n";
    for (const auto& a : j["attempts"])
      if (a.contains("error")) std::cout << "  attempt " << a.value("index", 0) << ": " << a["error"].get<std::string>() << "\n";
  }
  return kOk;
}

int cmd_demo_recover(std::size_t n, std::uint32_t k, std::optional<std::uint32_t> r_opt, std::optional<Fp> p_opt,
                     std::uint64_t seed, const std::string& dump) {
  if (n == 0) throw SpecError("--n must be positive");
  if (k > n) throw SpecError("--k cannot exceed --n");
  const std::uint32_t r = r_opt.value_or(std::max<std::uint32_t>(k, 1));
  const Fp p = p_opt.value_or(FieldParams::for_n(n).p);
  if (!is_prime(p) || p <= n || p >= (1U << 31)) throw SpecError("--p must be a prime in (n, 2^31)");
  Rng rng(seed);
  std::vector<Vertex> idx(n);
  for (Vertex i = 0; i < n; ++i) idx[i] = i;
  rng.shuffle(idx.begin(), idx.end());
  idx.resize(k);
  std::sort(idx.begin(), idx.end());
  SparseVector x;
  for (Vertex i : idx) x.entries.emplace_back(i, static_cast<Fp>(1 + rng.below(p - 1)));
  const std::uint32_t alpha = 8;
  RandomMatrix phi(derive_seed(seed, SeedTag::kSketchPhiR), alpha, p);
  Measurement m{r, syndromes(x, r, p), phi.apply(x)};

  std::cout << "n=" << n << " p=" << p << " r=" << r << " alpha=" << alpha << "\n";
  std::cout << "x =";
  for (const auto& [i, v] : x.entries) std::cout << " (" << i << ":" << v << ")";
  std::cout << (x.empty() ? " 0" : "") << "\n";
  if (!dump.empty()) {
    std::ofstream out(dump, std::ios::binary);
    auto put = [&](std::uint64_t v) {
      char buf[8];
      for (int i = 0; i < 8; ++i) buf[i] = static_cast<char>((v >> (8 * i)) & 0xFF);
      out.write(buf, 8);
    };
    put(n);
    put(p);
    put(r);
    put(alpha);
    for (Fp v : m.y) put(v);
    for (Fp v : m.z) put(v);
  }
  const auto rec = safe_recover(m, p, n, phi);
  if (!rec) {
    std::cout << "Fail: measurement does not decode to a verified " << r << "-sparse vector\n";
    return kOk;
  }
  std::cout << "recovered =";
  for (const auto& [i, v] : rec->entries) std::cout << " (" << i << ":" << v << ")";
  std::cout << (rec->empty() ? " 0" : "") << "\n";
  std::cout << (*rec == x ? "exact round-trip\n" : "MISMATCH\n");
  return *rec == x ? kOk : kVerifyFail;
}

int cmd_decompose(const InputOpts& io, Mode mode, const std::map<std::string, std::string>& params_kv,
                  std::optional<std::uint32_t> delta_opt) {
  EdgeSource src = load_source(io);
  EdgeStream s = src.open();
  Graph g = shadow_copy(s);
  const std::uint32_t delta = delta_opt.value_or(static_cast<std::uint32_t>(g.max_degree()));
  ParamSet params = ParamSet::defaults(mode, g.n(), delta);
  params.apply_overrides(params_kv);
  params.validate(g.n(), delta);
  Decomposition dec = compute_decomposition(g, params, delta);
  classify_sizes(dec, g, params, delta);
  EdgeStream s2 = src.open();
  classify_friendly_lonely(dec, collect_samples(s2, delta, params, io.seed), params, delta);
  std::cout << "delta=" << delta << " eps=" << params.eps << " sparse=" << dec.sparse.size()
            << " cliques=" << dec.cliques.size() << "\n";
  for (std::size_t i = 0; i < dec.cliques.size(); ++i) {
    const auto& c = dec.cliques[i];
    std::cout << "K" << i << ": size=" << c.members.size() << " class=" << size_class_name(c.size_class)
              << " t=" << c.non_edges << (c.holey ? " holey" : " unholey")
              << (c.friendly ? " friendly witness=" + std::to_string(*c.witness) : std::string(" lonely"))
              << " members=";
    for (std::size_t j = 0; j < c.members.size(); ++j) std::cout << (j ? "," : "") << c.members[j];
    std::cout << "\n";
  }
  const auto viol = verify_decomposition(dec, g, params.eps, delta);
  std::cout << "verification: " << (viol.empty() ? "ok" : std::to_string(viol.size()) + " violations") << "\n";
  for (const auto& v : viol)
    std::cout << "  clique " << v.clique << " vertex " << v.vertex << " (" << v.property << "): " << v.detail << "\n";
  return viol.empty() ? kOk : kVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-pass semi-streaming Δ-coloring"};
  app.require_subcommand(1);

  InputOpts io;
  RunConfig cfg;
  std::string mode = "desk", out, report;
  std::vector<std::string> params;
  std::optional<std::uint32_t> delta;
  std::optional<std::size_t> budget;

  auto* color = app.add_subcommand("color", "color a graph in one main pass");
  color->add_option("--input", io.input, "edge-list file");
  color->add_option("--gen", io.gen, "generator spec, e.g. clique-minus-edge:delta=16,blocks=8");
  color->add_option("--delta", delta, "declared maximum degree");
  color->add_option("--mode", mode, "desk or paper")->check(CLI::IsMember({"desk", "paper"}));
  color->add_option("--seed", cfg.seed, "seed");
  color->add_option("--retries", cfg.retries, "extra independent copies collected in the pass");
  color->add_option("--out", out, "coloring output (default stdout)");
  color->add_option("--report", report, "write the JSON run report here");
  color->add_flag("--no-shadow", "heuristic decomposition; verification skipped");
  color->add_option("--budget", budget, "space budget in bytes for the offline fallback gate");
  color->add_option("--param", params, "parameter override key=value (repeatable)");

  std::string graph, coloring;
  std::optional<std::uint32_t> vdelta;
  auto* verify = app.add_subcommand("verify", "check a coloring");
  verify->add_option("--graph", graph, "edge-list file")->required();
  verify->add_option("--coloring", coloring, "coloring file")->required();
  verify->add_option("--delta", vdelta, "palette size (default: maximum degree)");

  std::string spec, gout;
  auto* gen = app.add_subcommand("gen", "write a generated instance");
  gen->add_option("--spec", spec, "generator spec")->required();
  gen->add_option("--out", gout, "output file (default stdout)");

  std::string run;
  auto* rep = app.add_subcommand("report", "summarize a JSON run report");
  rep->add_option("--run", run, "report file written by color --report")->required();

  std::size_t dn = 32;
  std::uint32_t dk = 3;
  std::optional<std::uint32_t> dr;
  std::optional<Fp> dp;
  std::uint64_t dseed = 1;
  std::string dump;
  auto* demo = app.add_subcommand("demo-recover", "sparse-recovery round trip");
  demo->add_option("--n", dn, "vector length");
  demo->add_option("--k", dk, "nonzeros");
  demo->add_option("--r", dr, "sparsity the sketch is built for (default k)");
  demo->add_option("--p", dp, "prime modulus (default: smallest prime >= max(n+1, 101))");
  demo->add_option("--seed", dseed, "seed");
  demo->add_option("--dump", dump, "write the measurement as little-endian u64 words");

  auto* dec = app.add_subcommand("decompose", "print the sparse-dense decomposition");
  dec->add_option("--input", io.input, "edge-list file");
  dec->add_option("--gen", io.gen, "generator spec");
  dec->add_option("--delta", delta, "declared maximum degree");
  dec->add_option("--mode", mode, "desk or paper")->check(CLI::IsMember({"desk", "paper"}));
  dec->add_option("--seed", io.seed, "seed");
  dec->add_option("--param", params, "parameter override key=value (repeatable)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kUsage;
  }

  try {
    if (*color) {
      io.seed = cfg.seed;
      cfg.mode = parse_mode(mode);
      cfg.overrides = parse_params(params);
      cfg.delta = delta;
      cfg.budget_bytes = budget;
      cfg.shadow = color->count("--no-shadow") == 0;
      return cmd_color(io, cfg, out, report);
    }
    if (*verify) return cmd_verify(graph, coloring, vdelta);
    if (*gen) return cmd_gen(spec, gout);
    if (*rep) return cmd_report(run);
    if (*demo) return cmd_demo_recover(dn, dk, dr, dp, dseed, dump);
    if (*dec) return cmd_decompose(io, parse_mode(mode), parse_params(params), delta);
  } catch (const SpecError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const StreamError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kUsage;
  } catch (const DecompositionFailed& e) {
    std::cerr << "decomposition failed: " << e.what() << "\n";
    return kPipelineFail;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "report error: " << e.what() << "\n";
    return kUsage;
  } catch (const InvariantError& e) {
    std::cerr << "internal invariant violated: " << e.what() << "\n";
    return kPipelineFail;
  }
  return kUsage;
}
