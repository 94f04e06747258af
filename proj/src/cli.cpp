#include "parity/cli.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include "CLI11.hpp"
#include "json.hpp"
#include "parity/generators.hpp"
#include "parity/io.hpp"
#include "parity/oracle.hpp"
#include "parity/render.hpp"
#include "parity/solve.hpp"

namespace parity {
namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t elapsed_ns(Clock::time_point since) {
  return static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - since).count());
}

std::shared_ptr<spdlog::logger> logger() {
  static std::shared_ptr<spdlog::logger> log = [] {
    auto l = spdlog::stderr_color_mt("parity");
    l->set_pattern("[%l] %v");
    spdlog::level::level_enum level = spdlog::level::warn;
    if (const char* env = std::getenv("PARITY_LOG")) level = spdlog::level::from_str(env);
    l->set_level(level);
    return l;
  }();
  return log;
}

struct Common {
  std::string input;
  std::string output;
  std::string cycle_file;
  std::string happy_file;
  bool skip_gp = false;
  std::uint64_t seed = 0;
};

Instance load(const Common& c) {
  ValidationOptions opt;
  opt.check_general_position = !c.skip_gp;
  auto start = Clock::now();
  Instance inst = load_instance(c.input, opt);
  logger()->debug("loaded {} vertices, {} edges, |R| = {} in {} ns", inst.graph.vertex_count(),
                  inst.graph.edges.size(), inst.unhappy.size(), elapsed_ns(start));
  return inst;
}

void emit(const std::string& file, const std::string& text) {
  if (file.empty()) {
    std::cout << text;
  } else {
    write_file(file, text);
  }
}

int cmd_solve(const Common& c, bool construct) {
  const Instance inst = load(c);
  std::optional<std::vector<Vertex>> cycle;
  if (!c.cycle_file.empty()) cycle = parse_cycle(read_file(c.cycle_file));

  const auto start = Clock::now();
  const Solution s = solve_instance(inst, cycle, c.seed);
  const std::uint64_t ns = elapsed_ns(start);
  logger()->info("solver path {}, feasible {}", to_string(s.path), s.feasible);

  if (construct && s.feasible) {
    if (!s.happy) {
      std::cerr << "error: instance is feasible but no happy set was constructed: " << s.note << "\n";
      return kExitError;
    }
    const VerificationReport report = verify_happy_set(inst, *s.happy);
    if (!report.passed()) {
      std::cerr << "error: constructed happy set failed verification: "
                << report.failures.front().message << "\n";
      return kExitError;
    }
  }

  RunReport r;
  r.digest = instance_digest(inst);
  r.mode = construct ? "construct" : "decide";
  r.feasible = s.feasible;
  r.happy_size = s.happy ? s.happy->size() : 0;
  r.wall_ns = ns;
  r.solver_path = to_string(s.path);
  r.seed = c.seed;
  std::cout << to_json(r) << "\n";
  if (construct && s.feasible) {
    const std::string h = happy_set_to_json(*s.happy);
    if (c.output.empty()) {
      std::cout << h;
    } else {
      write_file(c.output, h);
    }
  }
  return s.feasible ? kExitFeasible : kExitInfeasible;
}

int cmd_verify(const Common& c) {
  const Instance inst = load(c);
  const EdgeSet h = parse_happy_set(read_file(c.happy_file));
  const VerificationReport report = verify_happy_set(inst, h);
  if (report.passed()) {
    std::cout << "pass\n";
    return kExitFeasible;
  }
  for (const auto& f : report.failures) {
    std::cout << "fail: " << f.message;
    for (const Edge& e : f.edges) std::cout << " [" << e.u << "," << e.v << "]";
    for (Vertex v : f.vertices) std::cout << " " << v;
    std::cout << "\n";
  }
  return kExitInfeasible;
}

int cmd_oracle(const Common& c, const OracleLimits& limits) {
  const Instance inst = load(c);
  const auto start = Clock::now();
  const OracleResult res = brute_force(inst, limits);
  const std::uint64_t ns = elapsed_ns(start);
  logger()->info("oracle explored {} nodes", res.nodes);
  if (res.status == OracleStatus::OutOfBudget) {
    std::cerr << "oracle out of budget: " << res.reason << "\n";
    return kExitBudget;
  }
  RunReport r;
  r.digest = instance_digest(inst);
  r.mode = "oracle";
  r.feasible = res.status == OracleStatus::Feasible;
  r.happy_size = res.happy ? res.happy->size() : 0;
  r.wall_ns = ns;
  r.solver_path = to_string(SolverPath::Oracle);
  r.seed = c.seed;
  std::cout << to_json(r) << "\n";
  if (res.happy && !c.output.empty()) write_file(c.output, happy_set_to_json(*res.happy));
  return r.feasible ? kExitFeasible : kExitInfeasible;
}

std::optional<GenKind> kind_or_complain(const std::string& name) {
  auto kind = parse_gen_kind(name);
  if (!kind) {
    std::cerr << "error: unknown kind '" << name
              << "' (expected xmonotone, convex-path, convex-graph, zigzag or spiral)\n";
  }
  return kind;
}

int cmd_gen(const Common& c, const std::string& kind_name, std::size_t n) {
  const auto kind = kind_or_complain(kind_name);
  if (!kind) return kExitError;
  emit(c.output, instance_to_json(generate(*kind, n, c.seed)));
  return kExitFeasible;
}

int cmd_render(const Common& c, bool show_vis) {
  const Instance inst = load(c);
  std::optional<EdgeSet> h;
  if (!c.happy_file.empty()) h = parse_happy_set(read_file(c.happy_file));
  RenderOptions opt;
  opt.show_vis = show_vis;
  emit(c.output, render_svg(inst, h ? &*h : nullptr, opt));
  return kExitFeasible;
}

int cmd_bench(const Common& c, const std::string& kind_name, const std::vector<std::size_t>& sizes,
              std::size_t seeds) {
  const auto kind = kind_or_complain(kind_name);
  if (!kind) return kExitError;
  std::ostringstream csv;
  csv << "kind,n,seed,solver_path,decision,happy_size,verified,solve_ns,verify_ns\n";
  for (std::size_t n : sizes) {
    for (std::size_t k = 0; k < seeds; ++k) {
      const std::uint64_t seed = c.seed + k;
      const Instance inst = generate(*kind, n, seed);
      auto start = Clock::now();
      const Solution s = solve_instance(inst, std::nullopt, seed);
      const std::uint64_t solve_ns = elapsed_ns(start);
      std::string verified = "n/a";
      std::uint64_t verify_ns = 0;
      if (s.happy) {
        start = Clock::now();
        verified = verify_happy_set(inst, *s.happy).passed() ? "yes" : "no";
        verify_ns = elapsed_ns(start);
      }
      csv << to_string(*kind) << ',' << n << ',' << seed << ',' << to_string(s.path) << ','
          << (s.feasible ? "feasible" : "infeasible") << ',' << (s.happy ? s.happy->size() : 0)
          << ',' << verified << ',' << solve_ns << ',' << verify_ns << '\n';
      logger()->info("bench {} n={} seed={} done in {} ns", to_string(*kind), n, seed, solve_ns);
    }
  }
  emit(c.output, csv.str());
  return kExitFeasible;
}

}  // namespace

std::string to_json(const RunReport& r) {
  nlohmann::ordered_json doc;
  char digest[17];
  std::snprintf(digest, sizeof digest, "%016llx", static_cast<unsigned long long>(r.digest));
  doc["digest"] = digest;
  doc["mode"] = r.mode;
  doc["decision"] = r.feasible ? "feasible" : "infeasible";
  doc["happy_size"] = r.happy_size;
  doc["wall_ns"] = r.wall_ns;
  doc["solver_path"] = r.solver_path;
  doc["seed"] = r.seed;
  return doc.dump();
}

int run_cli(int argc, char** argv) {
  CLI::App app{"Parity-constrained augmentation of plane geometric graphs"};
  app.require_subcommand(1);

  Common c;
  OracleLimits limits;
  std::string kind = "convex-path";
  std::size_t n = 16;
  std::vector<std::size_t> sizes{1000};
  std::size_t seeds = 1;
  bool show_vis = false;

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("-i,--input", c.input, "instance JSON")->required();
    sub->add_flag("--skip-gp-check", c.skip_gp, "skip the collinear-triple check");
  };
  auto add_seed = [&](CLI::App* sub) { sub->add_option("--seed", c.seed, "random seed"); };

  CLI::App* decide = app.add_subcommand("decide", "decide whether a happy set exists");
  add_input(decide);
  add_seed(decide);
  decide->add_option("--hugging-cycle", c.cycle_file, "hugging cycle JSON");

  CLI::App* construct = app.add_subcommand("construct", "construct and verify a happy set");
  add_input(construct);
  add_seed(construct);
  construct->add_option("--hugging-cycle", c.cycle_file, "hugging cycle JSON");
  construct->add_option("-o,--output", c.output, "happy set JSON (stdout if omitted)");

  CLI::App* verify = app.add_subcommand("verify", "check a happy set against an instance");
  add_input(verify);
  verify->add_option("--happy", c.happy_file, "happy set JSON")->required();

  CLI::App* oracle = app.add_subcommand("oracle", "exhaustive search");
  add_input(oracle);
  add_seed(oracle);
  oracle->add_option("-o,--output", c.output, "happy set JSON");
  oracle->add_option("--max-vertices", limits.max_vertices, "vertex limit");
  oracle->add_option("--max-vis-edges", limits.max_vis_edges, "candidate edge limit")->check(CLI::Range(1, 64));
  oracle->add_option("--node-budget", limits.node_budget, "search node limit");

  CLI::App* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("--kind", kind, "xmonotone|convex-path|convex-graph|zigzag|spiral")->required();
  gen->add_option("--n", n, "number of vertices")->required();
  add_seed(gen);
  gen->add_option("-o,--output", c.output, "instance JSON (stdout if omitted)");

  CLI::App* render = app.add_subcommand("render", "draw an instance as SVG");
  add_input(render);
  render->add_option("--happy", c.happy_file, "happy set JSON");
  render->add_option("-o,--output", c.output, "SVG file (stdout if omitted)");
  render->add_flag("--show-vis", show_vis, "draw the visibility graph");

  CLI::App* bench = app.add_subcommand("bench", "time the solver on generated instances");
  bench->add_option("--kind", kind, "generator family")->required();
  bench->add_option("--n", sizes, "sizes, comma separated")->delimiter(',');
  bench->add_option("--seeds", seeds, "seeds per size");
  add_seed(bench);
  bench->add_option("-o,--output", c.output, "CSV file (stdout if omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitFeasible : kExitError;
  }

  try {
    if (*decide) return cmd_solve(c, false);
    if (*construct) return cmd_solve(c, true);
    if (*verify) return cmd_verify(c);
    if (*oracle) return cmd_oracle(c, limits);
    if (*gen) return cmd_gen(c, kind, n);
    if (*render) return cmd_render(c, show_vis);
    if (*bench) return cmd_bench(c, kind, sizes, seeds);
  } catch (const ValidationError& e) {
    std::cerr << "error: invalid instance\n";
    for (const Violation& v : e.violations()) {
      std::cerr << "  " << to_string(v.kind) << ":";
      for (auto w : v.witnesses) std::cerr << ' ' << w;
      std::cerr << " (" << v.message << ")\n";
    }
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}

}  // namespace parity
