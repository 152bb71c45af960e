#include "plybasis/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "plybasis/builders.hpp"
#include "plybasis/errors.hpp"
#include "plybasis/generators.hpp"
#include "plybasis/io.hpp"
#include "plybasis/providers.hpp"
#include "plybasis/rng.hpp"
#include "plybasis/verification.hpp"

#ifndef PLYBASIS_VERSION
#define PLYBASIS_VERSION "0.0.0"
#endif

namespace plybasis {

namespace {

using Json = nlohmann::ordered_json;

// Where the graph comes from: a file or a named generator.
struct InstanceOptions {
  std::string graph_file;
  std::string decomposition_file;
  std::string family;
  int n = 0;
  int rows = 0;
  int cols = 0;
  int t = 2;
  int k = 2;
  int blocks = 4;
  int glue = 1;
  std::string kind = "cycle";
  std::uint64_t seed = 1;

  void attach(CLI::App& app, bool with_decomposition) {
    app.add_option("--graph", graph_file, "graph file");
    if (with_decomposition) app.add_option("--decomposition", decomposition_file, "decomposition file");
    app.add_option("--family", family,
                   "generator: grid, complete, cycle, random_interval, cactus, block_chain, random_adhesion");
    app.add_option("--n", n, "vertex count (grid side when rows/cols are absent)");
    app.add_option("--rows", rows);
    app.add_option("--cols", cols);
    app.add_option("--t", t, "width for random_interval");
    app.add_option("--bags", blocks, "bag or block count for block_chain and random_adhesion");
    app.add_option("--glue", glue, "shared vertices between blocks (1 or 2)");
    app.add_option("--kind", kind, "block kind: cycle, k4, wheel, random");
    app.add_option("--seed", seed, "random seed");
  }
};

BlockKind parse_kind(const std::string& s) {
  if (s == "cycle") return BlockKind::Cycle;
  if (s == "k4") return BlockKind::K4;
  if (s == "wheel") return BlockKind::Wheel;
  if (s == "random") return BlockKind::Random;
  throw UsageError("unknown block kind '" + s + "'");
}

// The adhesion generator reads --k through the same options.
Instance load_instance(const InstanceOptions& o, int k_for_generator) {
  if (!o.graph_file.empty() && !o.family.empty()) throw UsageError("give either --graph or --family, not both");
  Instance inst{Graph(0, {}), std::nullopt, {}};
  if (!o.graph_file.empty()) {
    inst.graph = parse_graph(read_text_file(o.graph_file));
    inst.descriptor = "file " + o.graph_file;
  } else if (o.family == "grid") {
    const int r = o.rows > 0 ? o.rows : o.n;
    const int c = o.cols > 0 ? o.cols : o.n;
    inst = generate_grid(r, c);
  } else if (o.family == "complete") {
    inst = generate_complete(o.n);
  } else if (o.family == "cycle") {
    inst = generate_cycle(o.n);
  } else if (o.family == "random_interval") {
    inst = generate_random_interval(o.n, o.t, o.seed);
  } else if (o.family == "cactus") {
    inst = generate_cactus(o.n, o.seed);
  } else if (o.family == "block_chain") {
    inst = generate_block_chain(o.blocks, parse_kind(o.kind), o.glue, o.seed);
  } else if (o.family == "random_adhesion") {
    inst = generate_random_adhesion(o.blocks, k_for_generator, o.seed);
  } else if (o.family.empty()) {
    throw UsageError("an instance is required: --graph FILE or --family NAME");
  } else {
    throw UsageError("unknown family '" + o.family + "'");
  }
  if (!o.decomposition_file.empty()) {
    inst.decomposition = parse_decomposition(read_text_file(o.decomposition_file), inst.graph.vertex_count());
    inst.descriptor += " + " + o.decomposition_file;
  }
  return inst;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot write '" + path + "'");
  f << text;
}

Json check_json(const Check& c) {
  return Json{{"name", c.name}, {"bound", c.bound},  {"observed", c.observed},
              {"pass", c.pass}, {"rows", c.rows},    {"detail", c.detail}};
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

struct Params {
  int n = 0;
  int m = 0;
  std::optional<int> t, k, b;
  std::optional<std::uint64_t> seed;
};

Json report(const std::string& instance, const std::string& method, const Params& p, const GeneratingSet* basis,
            const AuditReport& audits, double wall_ms, Json extra = Json::object()) {
  Json result = Json::object();
  result["ply"] = basis ? Json(basis->max_ply()) : Json(nullptr);
  result["size"] = basis ? Json(basis->size()) : Json(nullptr);
  bool generating = false;
  bool has_generating = false;
  Json list = Json::array();
  for (const Check& c : audits.checks) {
    list.push_back(check_json(c));
    if (c.name == "generating") {
      has_generating = true;
      generating = c.pass;
    }
  }
  result["generating"] = has_generating ? Json(generating) : Json(nullptr);
  result["audits"] = std::move(list);
  result["wall_ms"] = wall_ms;
  for (auto& [key, value] : extra.items()) result[key] = value;

  return Json{{"version", PLYBASIS_VERSION},
              {"instance", instance},
              {"method", method},
              {"params",
               {{"n", p.n},
                {"m", p.m},
                {"t", optional_json(p.t)},
                {"k", optional_json(p.k)},
                {"b", optional_json(p.b)},
                {"seed", optional_json(p.seed)}}},
              {"result", std::move(result)}};
}

class Stopwatch {
 public:
  explicit Stopwatch(bool enabled) : enabled_(enabled), start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    if (!enabled_) return 0.0;
    const auto d = std::chrono::steady_clock::now() - start_;
    return std::chrono::duration<double, std::milli>(d).count();
  }

 private:
  bool enabled_;
  std::chrono::steady_clock::time_point start_;
};

PathDecomposition decomposition_for(const Instance& inst, bool auto_pw, int cap) {
  if (auto_pw) return exact_pathwidth(inst.graph, cap).decomposition;
  if (!inst.decomposition) throw UsageError("this method needs --decomposition or --auto-pw");
  if (auto bad = validate(inst.graph, *inst.decomposition)) throw UsageError("invalid decomposition: " + bad->message);
  return *inst.decomposition;
}

MaxPlyMode parse_mode(const std::string& s) {
  if (s == "deterministic") return MaxPlyMode::Deterministic;
  if (s == "randomized") return MaxPlyMode::Randomized;
  throw UsageError("unknown --mode '" + s + "' (deterministic or randomized)");
}

std::vector<std::string> split_commas(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

// Generating set of g by one of the direct heuristics.
GeneratingSet run_direct(const Graph& g, const std::string& method, MaxPlyMode mode, std::uint64_t seed) {
  if (method == "fh") return fh_generating_set(g, seed);
  if (method == "maxply") return maxply_generating_set(g, mode, seed);
  if (method == "maxply-randomized") return maxply_generating_set(g, MaxPlyMode::Randomized, seed);
  if (method == "fundamental") return fundamental_basis(g, spanning_forest(g));
  throw UsageError("unknown method '" + method + "'");
}

int cmd_pw_exact(const InstanceOptions& io, int cap, const std::string& decomposition_out, bool normal, bool timing,
                 std::ostream& out) {
  const Stopwatch watch(timing);
  const Instance inst = load_instance(io, 0);
  PathwidthResult pw = exact_pathwidth(inst.graph, cap);
  PathDecomposition d = normal ? normalize(inst.graph, pw.decomposition) : pw.decomposition;
  if (!decomposition_out.empty()) write_text(decomposition_out, emit_decomposition(d));

  AuditReport audits;
  Check valid{"decomposition_valid", 0, 0, !validate(inst.graph, d).has_value(), {}, 1};
  audits.add(valid);
  Params p{inst.graph.vertex_count(), inst.graph.edge_count(), pw.width, {}, {}, {}};
  Json extra{{"width", pw.width}, {"bags", d.size()}, {"normal", d.is_normal()}};
  out << report(inst.descriptor, "pw-exact", p, nullptr, audits, watch.ms(), extra).dump(2) << '\n';
  return audits.pass() ? kExitOk : kExitAudit;
}

struct ConstructOptions {
  std::string method = "pw4t";
  bool auto_pw = false;
  int pw_cap = kDefaultPathwidthCap;
  std::optional<int> k;
  std::optional<int> b;
  std::string bag_basis = "exact";
  std::string mode = "deterministic";
  std::string basis_out;
  bool timing = false;
};

int cmd_construct(const InstanceOptions& io, const ConstructOptions& co, std::ostream& out) {
  const Stopwatch watch(co.timing);
  const Instance inst = load_instance(io, co.k.value_or(2));
  const Graph& g = inst.graph;
  Params p{g.vertex_count(), g.edge_count(), {}, {}, {}, {}};
  AuditReport audits;
  GeneratingSet basis;
  Json extra = Json::object();

  if (co.method == "pw4t") {
    const PathDecomposition d = normalize(g, decomposition_for(inst, co.auto_pw, co.pw_cap));
    const int t = d.width();
    p.t = t;
    const BuildResult r = build_pw4t(g, d);
    basis = r.basis;
    audits.add(verify_generating(g, basis));
    audits.add(verify_ply_bound(basis, 4 * t));
    audits.add(claim_technical_audit(g, d, basis, r.trace, t));
    audits.add(removal_audit(g, d, basis, r.trace, RemovalRule::MaxPly));
  } else if (co.method == "adhesion") {
    if (!co.k) throw UsageError("--method adhesion needs --k");
    const PathDecomposition d = decomposition_for(inst, co.auto_pw, co.pw_cap);
    const BagBasisProvider provider = make_provider(co.bag_basis, io.seed);
    int b = 0;
    if (co.b) {
      b = *co.b;
    } else {
      // smallest b the provider supports on this decomposition
      for (const EdgeSet& h : bag_graphs(g, d)) b = std::max(b, provider(g, h).max_ply());
    }
    p.k = *co.k;
    p.b = b;
    p.t = d.width();
    const BuildResult r = build_adhesion(g, d, *co.k, b, provider);
    basis = r.basis;
    audits.add(verify_generating(g, basis));
    if (*co.k <= 1) {
      audits.add(verify_ply_bound(basis, b));
    } else {
      audits.add(verify_ply_bound(basis, b + (2 * *co.k - 2) * r.trace.d_max));
      audits.add(claim_iold_audit(g, d, basis, r.trace, *co.k, b));
      audits.add(removal_audit(g, d, basis, r.trace, RemovalRule::MinBirth));
    }
    extra["d_max"] = r.trace.d_max;
    extra["bag_basis"] = co.bag_basis;
  } else {
    const MaxPlyMode mode = parse_mode(co.mode);
    if (co.method == "fh" || co.method == "maxply") p.seed = io.seed;
    basis = run_direct(g, co.method, mode, io.seed);
    audits.add(verify_generating(g, basis));
    if (co.method == "maxply") extra["mode"] = co.mode;
  }
  if (!co.basis_out.empty()) write_text(co.basis_out, emit_basis(basis));
  out << report(inst.descriptor, co.method, p, &basis, audits, watch.ms(), extra).dump(2) << '\n';
  return audits.pass() ? kExitOk : kExitAudit;
}

int cmd_verify(const InstanceOptions& io, const std::string& basis_file, std::optional<int> bound, bool timing,
               std::ostream& out) {
  const Stopwatch watch(timing);
  if (basis_file.empty()) throw UsageError("verify needs --basis FILE");
  const Instance inst = load_instance(io, 0);
  const GeneratingSet basis = parse_basis(read_text_file(basis_file), inst.graph.edge_count());
  AuditReport audits;
  audits.add(verify_generating(inst.graph, basis));
  if (bound) audits.add(verify_ply_bound(basis, *bound));
  Params p{inst.graph.vertex_count(), inst.graph.edge_count(), {}, {}, bound, {}};
  out << report(inst.descriptor, "verify", p, &basis, audits, watch.ms()).dump(2) << '\n';
  return audits.pass() ? kExitOk : kExitAudit;
}

int cmd_bench(const InstanceOptions& io, const std::string& methods, int trials, bool timing, std::ostream& out) {
  if (trials < 1) throw UsageError("--trials must be positive");
  const Stopwatch watch(timing);
  const auto names = split_commas(methods);
  if (names.empty()) throw UsageError("--methods is empty");

  Rng root(io.seed);
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < trials; ++i) seeds.push_back(root.next());

  bool all_ok = true;
  Json per_method = Json::object();
  std::string descriptor;
  Params p;
  for (const std::string& method : names) {
    std::map<int, int> histogram;
    long total = 0;
    int lo = 0;
    int hi = 0;
    int failures = 0;
    for (int i = 0; i < trials; ++i) {
      InstanceOptions trial = io;
      trial.seed = seeds[static_cast<std::size_t>(i)];  // random families get a fresh instance per trial
      const Instance inst = load_instance(trial, io.k);
      if (i == 0) {
        descriptor = inst.descriptor;
        p = Params{inst.graph.vertex_count(), inst.graph.edge_count(), {}, {}, {}, io.seed};
      }
      const GeneratingSet b = run_direct(inst.graph, method, MaxPlyMode::Deterministic, trial.seed);
      if (!verify_generating(inst.graph, b).pass) ++failures;
      const int ply = b.max_ply();
      ++histogram[ply];
      total += ply;
      lo = i == 0 ? ply : std::min(lo, ply);
      hi = std::max(hi, ply);
    }
    Json hist = Json::object();
    for (auto [ply, count] : histogram) hist[std::to_string(ply)] = count;
    per_method[method] = Json{{"min", lo},
                              {"max", hi},
                              {"mean", static_cast<double>(total) / trials},
                              {"histogram", hist},
                              {"generating_failures", failures}};
    all_ok = all_ok && failures == 0;
  }
  AuditReport audits;
  audits.add(Check{"generating", 0, 0, all_ok, all_ok ? "all trials" : "some trials failed", trials});
  Json extra{{"trials", trials}, {"methods", per_method}};
  out << report(descriptor, "bench", p, nullptr, audits, watch.ms(), extra).dump(2) << '\n';
  return all_ok ? kExitOk : kExitAudit;
}

int cmd_generate(const InstanceOptions& io, int k, const std::string& graph_out, const std::string& decomposition_out,
                 std::ostream& out) {
  const Instance inst = load_instance(io, k);
  const std::string text = "c " + inst.descriptor + "\n" + emit_graph(inst.graph);
  if (graph_out.empty()) out << text;
  else write_text(graph_out, text);
  if (!decomposition_out.empty()) {
    if (!inst.decomposition) throw UsageError("family '" + io.family + "' has no decomposition");
    write_text(decomposition_out, emit_decomposition(*inst.decomposition));
  }
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Low-ply cycle bases from path decompositions", "plybasis"};
  app.require_subcommand(1);
  app.set_version_flag("--version", PLYBASIS_VERSION);

  InstanceOptions pw_io, construct_io, verify_io, bench_io, generate_io;
  bool timing = false;

  auto* pw = app.add_subcommand("pw-exact", "exact pathwidth and an optimal decomposition");
  pw_io.attach(*pw, false);
  int pw_cap = kDefaultPathwidthCap;
  std::string pw_out;
  bool pw_normal = false;
  pw->add_option("--cap", pw_cap, "largest vertex count accepted");
  pw->add_option("--decomposition-out", pw_out, "write the decomposition here");
  pw->add_flag("--normal", pw_normal, "normalize the decomposition before writing");
  pw->add_flag("--timing", timing, "report wall time (otherwise 0 for reproducible output)");

  auto* construct = app.add_subcommand("construct", "build a generating set and audit it");
  construct_io.attach(*construct, true);
  ConstructOptions co;
  construct->add_option("--method", co.method, "pw4t, adhesion, fh, maxply, fundamental")
      ->check(CLI::IsMember({"pw4t", "adhesion", "fh", "maxply", "fundamental"}));
  construct->add_flag("--auto-pw", co.auto_pw, "compute an optimal decomposition");
  construct->add_option("--pw-cap", co.pw_cap, "vertex cap for --auto-pw");
  construct->add_option("--k", co.k, "adhesion bound");
  construct->add_option("--b", co.b, "per-bag ply bound (default: what the bag basis achieves)");
  construct->add_option("--bag-basis", co.bag_basis, "exact, best, maxply, fh, fundamental")
      ->check(CLI::IsMember(provider_names()));
  construct->add_option("--mode", co.mode, "maxply deletion rule: deterministic or randomized");
  construct->add_option("--basis-out", co.basis_out, "write the generating set here");
  construct->add_flag("--timing", co.timing, "report wall time");

  auto* verify = app.add_subcommand("verify", "audit a basis file against a graph");
  verify_io.attach(*verify, false);
  std::string basis_file;
  std::optional<int> bound;
  verify->add_option("--basis", basis_file, "basis file")->required();
  verify->add_option("--bound", bound, "ply bound to check");
  verify->add_flag("--timing", timing, "report wall time");

  auto* bench = app.add_subcommand("bench", "ply statistics of the heuristics over many seeds");
  bench_io.attach(*bench, false);
  std::string methods = "fh,maxply";
  int trials = 10;
  bench->add_option("--methods", methods, "comma-separated: fh, maxply, maxply-randomized, fundamental");
  bench->add_option("--trials", trials);
  bench->add_option("--k", bench_io.k, "adhesion for random_adhesion");
  bench->add_flag("--timing", timing, "report wall time");

  auto* generate = app.add_subcommand("generate", "write a generated graph (and decomposition)");
  generate_io.attach(*generate, false);
  int gen_k = 2;
  std::string gen_out, gen_dec_out;
  generate->add_option("--k", gen_k, "adhesion for random_adhesion");
  generate->add_option("--out", gen_out, "graph file (default: standard output)");
  generate->add_option("--decomposition-out", gen_dec_out, "decomposition file");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*pw) return cmd_pw_exact(pw_io, pw_cap, pw_out, pw_normal, timing, out);
    if (*construct) return cmd_construct(construct_io, co, out);
    if (*verify) return cmd_verify(verify_io, basis_file, bound, timing, out);
    if (*bench) return cmd_bench(bench_io, methods, trials, timing, out);
    if (*generate) return cmd_generate(generate_io, gen_k, gen_out, gen_dec_out, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
  } catch (const SizeError& e) {
    err << "size error: " << e.what() << '\n';
  } catch (const PreconditionError& e) {
    err << "precondition failed: " << e.what() << '\n';
  } catch (const DisconnectedError& e) {
    err << "error: " << e.what() << '\n';
  }
  return kExitUsage;
}

}  // namespace plybasis
