#include "ckc/cli.hpp"

#include <iostream>
#include <optional>

#include "CLI11.hpp"

#include "ckc/bench.hpp"
#include "ckc/errors.hpp"
#include "ckc/generators.hpp"
#include "ckc/io.hpp"
#include "ckc/oracles.hpp"
#include "ckc/verify.hpp"

namespace ckc::cli {

namespace {

std::vector<std::uint64_t> parse_seeds(const std::string& text) {
  std::vector<std::uint64_t> seeds;
  std::stringstream in(text);
  std::string part;
  try {
    while (std::getline(in, part, ',')) {
      if (auto dots = part.find(".."); dots != std::string::npos) {
        const auto lo = std::stoull(part.substr(0, dots));
        const auto hi = std::stoull(part.substr(dots + 2));
        if (hi < lo) throw InvalidInput("empty seed range " + part);
        for (auto s = lo; s <= hi; ++s) seeds.push_back(s);
      } else {
        seeds.push_back(std::stoull(part));
      }
    }
  } catch (const std::logic_error&) {
    throw InvalidInput("bad seed list '" + text + "'");
  }
  if (seeds.empty()) throw InvalidInput("no seeds given");
  return seeds;
}

MetricKind parse_metric(const std::string& name) {
  if (name == "line") return MetricKind::kLine;
  if (name == "grid" || name == "grid-l1") return MetricKind::kGridL1;
  throw InvalidInput("unknown metric '" + name + "'");
}

struct Settings {
  std::string out_path;
  bool json_logs = false;

  std::string instance_path;
  std::string solution_path;
  std::string trace_path;
  bool linear_scan = false;
  bool no_enumerate = false;
  bool dump_partitions = false;
  bool fair = false;
  long samples = 0;
  std::uint64_t seed = 1;
  std::uint64_t cap = kDefaultEnumerationCap;

  std::string graph_path;
  std::string setcover_path;
  int t = 1;
  int n = 8;
  int k = 2;
  int gamma = 2;
  std::string metric = "line";
  std::string demand_density = "1/2";
  std::string p_density = "1/2";

  long M = 100;
  std::string metadata_path;

  std::string suite = "random";
  std::string seeds = "1..10";
  bool bench_json = false;
};

class Runner {
 public:
  Runner(const Settings& s, std::ostream& out, std::ostream& err) : s_(s), out_(out), err_(err) {}

  void emit(const std::string& text) {
    if (s_.out_path.empty()) {
      out_ << text;
    } else {
      write_file(s_.out_path, text);
    }
  }
  void emit(const Json& doc) { emit(doc.dump(2) + "\n"); }

  void log(const Json& event) {
    if (s_.json_logs) err_ << event.dump() << '\n';
  }

  int infeasible() {
    emit(Json{{"status", "infeasible"}});
    err_ << "no candidate radius admits a solution\n";
    return kInfeasible;
  }

  int solve() {
    const LoadedInstance loaded = load_instance(s_.instance_path);
    ColorfulOptions opts;
    opts.linear_scan = s_.linear_scan;
    opts.enumerate_when_gamma_ge_k = !s_.no_enumerate;
    if (s_.dump_partitions) {
      opts.on_partition = [this](const Rational& r, const FractionalPoint&, const GoodPartition& p) {
        err_ << Json{{"event", "partition"}, {"radius", to_string(r)}, {"centers", p.centers},
                     {"clusters", p.clusters}}.dump()
             << '\n';
      };
    }
    auto sol = solve_colorful(loaded.instance, opts);
    if (!sol) return infeasible();
    Json trace = trace_json(*sol);
    for (const auto& rec : trace["radii"]) log(Json{{"event", "radius"}, {"record", rec}});
    Json doc = colorful_solution_json(loaded.instance, sol->solution);
    if (!s_.trace_path.empty()) write_file(s_.trace_path, trace.dump(2) + "\n");
    doc["trace"] = std::move(trace);
    emit(doc);
    return kOk;
  }

  int solve_fair_cmd() {
    const LoadedInstance loaded = load_instance(s_.instance_path);
    const FairInstance finst = loaded.fair();
    FairOptions opts;
    opts.enumerate_when_gamma_ge_k = !s_.no_enumerate;
    auto sol = solve_fair(finst, opts);
    if (!sol) return infeasible();
    Json trace = fair_trace_json(*sol);
    for (const auto& rec : trace["radii"]) log(Json{{"event", "radius"}, {"record", rec}});
    Json doc;
    doc["radius"] = to_string(sol->distribution.radius);
    doc["distribution"] = distribution_json(sol->distribution);
    if (s_.samples > 0) {
      Json draws = Json::array();
      for (long i = 0; i < s_.samples; ++i) {
        draws.push_back(sample(sol->distribution, s_.seed + static_cast<std::uint64_t>(i)));
      }
      doc["samples"] = std::move(draws);
    }
    doc["trace"] = std::move(trace);
    emit(doc);
    return kOk;
  }

  int brute() {
    const LoadedInstance loaded = load_instance(s_.instance_path);
    if (s_.fair) {
      auto dist = brute_force_fair(loaded.fair(), s_.cap);
      if (!dist) return infeasible();
      emit(Json{{"radius", to_string(dist->radius)}, {"distribution", distribution_json(*dist)}});
      return kOk;
    }
    auto best = brute_force_colorful(loaded.instance, s_.cap);
    if (!best) return infeasible();
    emit(colorful_solution_json(loaded.instance, *best));
    return kOk;
  }

  int gen_vc3() {
    const Graph g = parse_graph(read_file(s_.graph_path));
    emit(serialize_instance(gen_from_vc3(g, s_.t, &err_)));
    return kOk;
  }

  int gen_setcover() {
    const SetCoverInstance sc = parse_setcover(read_file(s_.setcover_path));
    emit(serialize_instance(gen_from_setcover(sc, s_.t)));
    return kOk;
  }

  RandomSpec spec() const {
    RandomSpec spec;
    spec.seed = s_.seed;
    spec.n = s_.n;
    spec.k = s_.k;
    spec.gamma = s_.gamma;
    spec.metric = parse_metric(s_.metric);
    spec.demand_density = parse_rational(s_.demand_density);
    spec.p_density = parse_rational(s_.p_density);
    return spec;
  }

  int gen_random() {
    if (s_.fair) {
      const FairInstance finst = gen_random_fair(spec());
      emit(serialize_instance(finst.base(), &finst.p()));
    } else {
      emit(serialize_instance(gen_random_instance(spec())));
    }
    return kOk;
  }

  int fixture() {
    const AppendixB fx = fixture_appendix_b(s_.M);
    emit(serialize_instance(fx.instance));
    if (!s_.metadata_path.empty()) {
      Json x = Json::array();
      Json y = Json::array();
      for (const auto& v : fx.point.x) x.push_back(to_string(v));
      for (const auto& v : fx.point.y) y.push_back(to_string(v));
      Json meta{{"M", to_string(fx.M)}, {"c1", fx.c1}, {"c2", fx.c2}, {"x", x}, {"y", y}};
      write_file(s_.metadata_path, meta.dump(2) + "\n");
    }
    return kOk;
  }

  int bench() {
    if (s_.suite != "random") throw InvalidInput("unknown suite '" + s_.suite + "'");
    BenchConfig config;
    config.seeds = parse_seeds(s_.seeds);
    config.spec = spec();
    config.fair = s_.fair;
    config.cap = s_.cap;
    config.threads = worker_count();
    const BenchReport report = run_bench(config);
    emit(s_.bench_json ? report_json(report).dump(2) + "\n" : format_report(report));
    return report.clean() ? kOk : kInvariant;
  }

  int verify() {
    const LoadedInstance loaded = load_instance(s_.instance_path);
    Json doc;
    try {
      doc = Json::parse(read_file(s_.solution_path));
    } catch (const Json::exception& e) {
      throw InvalidInput(std::string("solution is not valid JSON: ") + e.what());
    }
    const auto problems = verify_solution(loaded, doc);
    if (problems.empty()) {
      emit(std::string("ok\n"));
      return kOk;
    }
    std::string text;
    for (const auto& p : problems) text += "violation: " + p + "\n";
    emit(text);
    return kInvariant;
  }

 private:
  const Settings& s_;
  std::ostream& out_;
  std::ostream& err_;
};

}  // namespace

int run(int argc, char** argv, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Colorful and fair colorful k-center solver"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", s.out_path, "Write the result to FILE instead of stdout");
  app.add_flag("--json-logs", s.json_logs, "Structured per-radius trace on stderr");

  auto* solve = app.add_subcommand("solve", "Colorful k-center, radius within 4x optimal");
  solve->add_option("--instance", s.instance_path)->required();
  solve->add_flag("--linear-scan", s.linear_scan, "Scan radii upward instead of bisecting");
  solve->add_option("--trace", s.trace_path, "Also write the trace to FILE");
  solve->add_flag("--dump-partitions", s.dump_partitions, "Print every partition on stderr");
  solve->add_flag("--no-enumerate", s.no_enumerate, "Run round-or-cut even when gamma >= k");

  auto* solve_fair = app.add_subcommand("solve-fair", "Fair colorful k-center");
  solve_fair->add_option("--instance", s.instance_path)->required();
  solve_fair->add_option("--samples", s.samples, "Number of sampled center sets");
  solve_fair->add_option("--seed", s.seed);
  solve_fair->add_flag("--no-enumerate", s.no_enumerate, "Run column generation even when gamma >= k");

  auto* brute = app.add_subcommand("brute", "Exact optimum by enumeration");
  brute->add_option("--instance", s.instance_path)->required();
  brute->add_flag("--fair", s.fair);
  brute->add_option("--cap", s.cap, "Largest C(n, k) to enumerate");

  auto* gen = app.add_subcommand("gen", "Instance generators");
  gen->require_subcommand(1);
  auto* vc3 = gen->add_subcommand("vc3", "From a graph (edge-list file)");
  vc3->add_option("--graph", s.graph_path)->required();
  vc3->add_option("--t", s.t)->required();
  auto* setcover = gen->add_subcommand("setcover", "From a set cover instance (JSON)");
  setcover->add_option("--instance", s.setcover_path)->required();
  setcover->add_option("--t", s.t)->required();
  auto* random = gen->add_subcommand("random", "Random instance");
  auto add_random_options = [&s](CLI::App* cmd) {
    cmd->add_option("--n", s.n);
    cmd->add_option("--k", s.k);
    cmd->add_option("--gamma", s.gamma);
    cmd->add_option("--metric", s.metric, "line or grid");
    cmd->add_option("--demand-density", s.demand_density);
    cmd->add_option("--p-density", s.p_density);
    cmd->add_flag("--fair", s.fair);
  };
  random->add_option("--seed", s.seed);
  add_random_options(random);

  auto* fixture = app.add_subcommand("fixture", "Fixed instances");
  fixture->require_subcommand(1);
  auto* appendix = fixture->add_subcommand("appendix-b", "Integrality-gap example, k = 2");
  appendix->add_option("--M", s.M);
  appendix->add_option("--metadata", s.metadata_path, "Write centers and fractional point");

  auto* bench = app.add_subcommand("bench", "Solver against oracle on random instances");
  bench->add_option("--suite", s.suite);
  bench->add_option("--seeds", s.seeds, "e.g. 1..50 or 1,4,9");
  bench->add_option("--cap", s.cap);
  bench->add_flag("--json", s.bench_json);
  add_random_options(bench);

  auto* verify = app.add_subcommand("verify", "Re-check a solution file");
  verify->add_option("--instance", s.instance_path)->required();
  verify->add_option("--solution", s.solution_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  Runner runner(s, out, err);
  try {
    if (*solve) return runner.solve();
    if (*solve_fair) return runner.solve_fair_cmd();
    if (*brute) return runner.brute();
    if (*vc3) return runner.gen_vc3();
    if (*setcover) return runner.gen_setcover();
    if (*random) return runner.gen_random();
    if (*appendix) return runner.fixture();
    if (*bench) return runner.bench();
    if (*verify) return runner.verify();
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const EnumerationCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << '\n';
    return kInvariant;
  }
  return kUsage;
}

}  // namespace ckc::cli
