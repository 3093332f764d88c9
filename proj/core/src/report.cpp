#include "qtam/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <map>
#include <ostream>

#include <json.hpp>

#include "qtam/complexity.hpp"

namespace qtam {

namespace {

using nlohmann::json;

std::array<double, 7> front_row(const EvaluatedSolution& es) {
  return {es.eval.objectives.f[0], es.eval.objectives.f[1],
          es.eval.objectives.f[2], es.eval.objectives.f[3],
          es.eval.objectives.f[4], es.eval.g_sum, es.eval.c_sum};
}

}  // namespace

void write_front_csv(std::ostream& out, const ParetoArchive& archive) {
  std::vector<std::array<double, 7>> rows;
  rows.reserve(archive.members().size());
  for (const auto& m : archive.members()) rows.push_back(front_row(m));
  std::sort(rows.begin(), rows.end());

  out << "f1,f2,f3,f4,f5,g_s,c_s\n";
  char buf[64];
  for (const auto& row : rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::snprintf(buf, sizeof(buf), "%.17g", row[i]);
      out << buf << (i + 1 < row.size() ? "," : "\n");
    }
  }
}

std::string report_json(const CircuitSpec& spec, const RunConfig& cfg,
                        const RunOutput& output) {
  json j;
  j["config_hash"] = config_hash(cfg);
  j["chains"] = static_cast<int>(output.seeds.size());
  j["seeds"] = output.seeds;
  j["iterations"] = cfg.annealer.iterations;
  j["problem"] = {{"vertices", spec.problem.vertices},
                  {"edges", spec.problem.edges.size()},
                  {"gates", spec.gates.size()},
                  {"nets", spec.nets.size()},
                  {"grid", {{"width", spec.grid_width},
                            {"height", spec.grid_height},
                            {"layers", spec.num_layers}}}};

  auto front = json::array();
  std::vector<std::array<double, 7>> rows;
  for (const auto& m : output.archive.members()) rows.push_back(front_row(m));
  std::sort(rows.begin(), rows.end());
  for (const auto& row : rows)
    front.push_back({row[0], row[1], row[2], row[3], row[4], row[5], row[6]});
  j["archive"] = {{"size", output.archive.size()},
                  {"capacity", output.archive.capacity()},
                  {"front", front}};

  const auto& best = output.best;
  j["best"] = {{"objectives", best.eval.objectives.f},
               {"scalar", best.eval.scalar},
               {"g_sum", best.eval.g_sum},
               {"c_sum", best.eval.c_sum},
               {"expectation", best.eval.expectation},
               {"divergence", best.eval.divergence},
               {"route_cost", best.eval.route_cost}};

  std::map<std::string, int> cases;
  for (const auto& trace : output.traces)
    for (const auto& row : trace)
      ++cases[std::string(1, static_cast<char>(row.step))];
  j["cases"] = cases;

  const ComplexityParams bound_params{
      3, std::max(cfg.annealer.iterations, 1),
      std::max(cfg.annealer.archive_capacity, 1), 5};
  j["counters"] = {{"dominance_evaluations", output.dominance_evaluations},
                   {"archive_comparisons", output.archive_comparisons},
                   {"dominance_bound",
                    qtam_ops(bound_params) * output.seeds.size()}};

  return j.dump(2);
}

}  // namespace qtam
