// Command-line front end: optimize | verify | bench | qaoa | route.
//
// Exit codes: 0 success, 1 validation/config problem, 2 I/O failure,
// 3 capacity exceeded.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "qtam/circuit.hpp"
#include "qtam/complexity.hpp"
#include "qtam/config.hpp"
#include "qtam/errors.hpp"
#include "qtam/pipeline.hpp"
#include "qtam/qaoa.hpp"
#include "qtam/report.hpp"
#include "qtam/router.hpp"

namespace {

enum class LogLevel { Quiet = 0, Info = 1, Debug = 2 };

LogLevel log_level() {
  const char* env = std::getenv("QTAM_LOG");
  if (!env) return LogLevel::Quiet;
  const std::string v(env);
  if (v == "debug") return LogLevel::Debug;
  if (v == "info") return LogLevel::Info;
  return LogLevel::Quiet;
}

void log_info(const std::string& msg) {
  if (log_level() >= LogLevel::Info) std::fprintf(stderr, "[qtam] %s\n", msg.c_str());
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw qtam::IoError("cannot open for writing: " + path);
  out << content;
  if (!out) throw qtam::IoError("error writing: " + path);
}

qtam::ProblemGraph parse_edge_list(const std::string& text, int vertices) {
  qtam::ProblemGraph g;
  int max_vertex = -1;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos)
      throw qtam::ConfigError("edges look like 0-1,1-2");
    const int a = std::stoi(item.substr(0, dash));
    const int b = std::stoi(item.substr(dash + 1));
    g.edges.emplace_back(a, b);
    max_vertex = std::max({max_vertex, a, b});
  }
  if (g.edges.empty()) throw qtam::ConfigError("no edges given");
  g.vertices = vertices > 0 ? vertices : max_vertex + 1;
  return g;
}

int run_optimize(const std::string& spec_path, const std::string& config_path,
                 std::optional<std::uint64_t> seed,
                 std::optional<int> iterations, std::optional<int> chains,
                 const std::string& out_dir) {
  const auto spec = qtam::load_circuit(spec_path);
  const auto problems = qtam::validate(spec);
  if (!problems.empty()) {
    for (const auto& p : problems) std::fprintf(stderr, "invalid: %s\n", p.c_str());
    return 1;
  }
  qtam::RunConfig cfg = config_path.empty() ? qtam::default_config()
                                            : qtam::load_config(config_path);
  if (seed) {
    cfg.annealer.seed = *seed;
    cfg.seeds.clear();
  }
  if (iterations) cfg.annealer.iterations = *iterations;
  if (chains) {
    cfg.chains = *chains;
    cfg.seeds.clear();
  }

  log_info("optimizing " + spec_path);
  const auto output = qtam::run_optimization(spec, cfg);

  std::ostringstream front;
  qtam::write_front_csv(front, output.archive);
  write_file(out_dir + "/front.csv", front.str());
  write_file(out_dir + "/report.json", qtam::report_json(spec, cfg, output));
  log_info("archive size " + std::to_string(output.archive.size()));
  std::printf("front: %d solutions, best weighted sum %.17g\n",
              output.archive.size(), output.best.eval.scalar);
  std::printf("wrote %s/front.csv and %s/report.json\n", out_dir.c_str(),
              out_dir.c_str());
  return 0;
}

int run_verify(const std::string& spec_path) {
  const auto spec = qtam::load_circuit(spec_path);
  auto problems = qtam::validate(spec);
  bool any_placement = false;
  for (const auto& g : spec.gates)
    if (g.initial_pos) any_placement = true;
  if (problems.empty() && any_placement) {
    const auto s = qtam::seed_solution(spec, 1);
    const auto layout = qtam::validate(spec, s);
    problems.insert(problems.end(), layout.begin(), layout.end());
  }
  if (!problems.empty()) {
    for (const auto& p : problems) std::fprintf(stderr, "invalid: %s\n", p.c_str());
    return 1;
  }
  std::printf("ok: %zu gates, %zu nets, %d layers\n", spec.gates.size(),
              spec.nets.size(), spec.num_layers);
  return 0;
}

int run_bench(const std::string& out_dir, int it_lo, int it_hi, int it_step,
              int pop_lo, int pop_hi, int pop_step) {
  const auto rows = qtam::complexity_sweep(it_lo, it_hi, it_step, pop_lo,
                                           pop_hi, pop_step, 3, 5);
  std::ostringstream csv;
  qtam::write_complexity_csv(csv, rows);
  write_file(out_dir + "/complexity.csv", csv.str());

  const qtam::ComplexityParams headline{3, it_hi, pop_hi, 5};
  std::printf("at n_it=%d, pop=%d: qtam=%.17g nsga2=%.17g nsga2_opt=%.17g\n",
              it_hi, pop_hi, qtam::qtam_ops(headline),
              qtam::nsga2_ops(headline), qtam::nsga2_opt_ops(headline));
  std::printf("wrote %s/complexity.csv (%zu rows)\n", out_dir.c_str(),
              rows.size());
  return 0;
}

int run_qaoa(const std::string& edges, int vertices, int depth, int budget,
             std::uint64_t seed, std::size_t memory_mib) {
  const auto graph = parse_edge_list(edges, vertices);
  const auto result = qtam::maximize_objective(graph, depth, budget, seed,
                                               memory_mib << 20);
  nlohmann::json j;
  j["value"] = result.value;
  j["evaluations"] = result.evaluations;
  j["mixer"] = result.params.mixer;
  j["phase"] = result.params.phase;
  std::printf("%s\n", j.dump(2).c_str());
  return 0;
}

int run_route(const std::string& spec_path, std::uint64_t seed,
              double via_cost) {
  const auto spec = qtam::load_circuit(spec_path);
  const auto problems = qtam::validate(spec);
  if (!problems.empty()) {
    for (const auto& p : problems) std::fprintf(stderr, "invalid: %s\n", p.c_str());
    return 1;
  }
  qtam::RandomSource rng(seed);
  bool any_placement = false;
  for (const auto& g : spec.gates)
    if (g.initial_pos) any_placement = true;
  qtam::Solution s = any_placement ? qtam::seed_solution(spec, 1)
                                   : qtam::random_solution(spec, 1, rng);
  s = qtam::route_all(spec, std::move(s), via_cost);

  nlohmann::json j;
  auto nets = nlohmann::json::array();
  for (std::size_t i = 0; i < spec.nets.size(); ++i) {
    const auto& r = s.routes[i];
    nlohmann::json nj;
    nj["id"] = spec.nets[i].id;
    nj["cost"] = r.cost;
    nj["unreachable"] = r.unreachable;
    nj["segments"] = r.segments.size();
    if (r.separation)
      nj["separation"] = {r.separation->x, r.separation->y,
                          r.separation->layer};
    nets.push_back(std::move(nj));
  }
  j["nets"] = nets;
  std::printf("%s\n", j.dump(2).c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"constrained multi-objective layout annealer"};
  app.require_subcommand(1);

  std::string spec_path;
  std::string config_path;
  std::string out_dir = ".";
  std::optional<std::uint64_t> seed_override;
  std::optional<int> iter_override;
  std::optional<int> chain_override;

  auto* optimize = app.add_subcommand("optimize", "anneal a circuit layout");
  optimize->add_option("--spec", spec_path, "circuit JSON")->required();
  optimize->add_option("--config", config_path, "run configuration JSON");
  optimize->add_option("--seed", seed_override, "override the seed");
  optimize->add_option("--iterations", iter_override, "override iterations");
  optimize->add_option("--chains", chain_override, "independent chains");
  optimize->add_option("--out", out_dir, "output directory");

  auto* verify = app.add_subcommand("verify", "validate a circuit document");
  verify->add_option("--spec", spec_path, "circuit JSON")->required();

  int it_lo = 1, it_hi = 100, it_step = 1;
  int pop_lo = 1, pop_hi = 500, pop_step = 1;
  auto* bench = app.add_subcommand("bench", "write the cost-model sweep");
  bench->add_option("--out", out_dir, "output directory");
  bench->add_option("--it-lo", it_lo, "iteration range start");
  bench->add_option("--it-hi", it_hi, "iteration range end");
  bench->add_option("--it-step", it_step, "iteration stride");
  bench->add_option("--pop-lo", pop_lo, "population range start");
  bench->add_option("--pop-hi", pop_hi, "population range end");
  bench->add_option("--pop-step", pop_step, "population stride");

  std::string edges;
  int vertices = 0;
  int depth = 1;
  int budget = 400;
  std::uint64_t seed = 1;
  std::size_t memory_mib = 512;
  auto* qaoa = app.add_subcommand("qaoa", "maximize the expected cut");
  qaoa->add_option("--edges", edges, "edge list, e.g. 0-1,1-2")->required();
  qaoa->add_option("--vertices", vertices, "vertex count (default: inferred)");
  qaoa->add_option("--depth", depth, "alternation depth");
  qaoa->add_option("--budget", budget, "state evolutions allowed");
  qaoa->add_option("--seed", seed, "search seed");
  qaoa->add_option("--memory-mib", memory_mib, "state memory budget");

  double via_cost = 2.0;
  auto* route = app.add_subcommand("route", "route one layout and print it");
  route->add_option("--spec", spec_path, "circuit JSON")->required();
  route->add_option("--seed", seed, "layout seed when the spec places nothing");
  route->add_option("--via-cost", via_cost, "inter-layer hop cost");

  CLI11_PARSE(app, argc, argv);

  try {
    if (optimize->parsed())
      return run_optimize(spec_path, config_path, seed_override, iter_override,
                          chain_override, out_dir);
    if (verify->parsed()) return run_verify(spec_path);
    if (bench->parsed())
      return run_bench(out_dir, it_lo, it_hi, it_step, pop_lo, pop_hi,
                       pop_step);
    if (qaoa->parsed())
      return run_qaoa(edges, vertices, depth, budget, seed, memory_mib);
    if (route->parsed()) return run_route(spec_path, seed, via_cost);
  } catch (const qtam::CapacityError& e) {
    std::fprintf(stderr, "capacity: %s\n", e.what());
    return 3;
  } catch (const qtam::IoError& e) {
    std::fprintf(stderr, "io: %s\n", e.what());
    return 2;
  } catch (const qtam::ConfigError& e) {
    std::fprintf(stderr, "config: %s\n", e.what());
    return 1;
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "invalid: %s\n", e.what());
    return 1;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
