#include "qtam/pipeline.hpp"

#include <exception>
#include <optional>
#include <thread>
#include <utility>

namespace qtam {

RunOutput run_optimization(const CircuitSpec& spec, const RunConfig& cfg) {
  std::vector<std::uint64_t> seeds = cfg.seeds;
  if (seeds.empty())
    for (int i = 0; i < cfg.chains; ++i)
      seeds.push_back(cfg.annealer.seed + static_cast<std::uint64_t>(i));

  const Evaluator evaluator(spec, cfg.evaluation);
  OpCounters counters;

  std::vector<AnnealResult> results;
  results.reserve(seeds.size());

  if (seeds.size() == 1) {
    AnnealerConfig chain_cfg = cfg.annealer;
    chain_cfg.seed = seeds[0];
    results.push_back(qtam_run(evaluator, chain_cfg, &counters));
  } else {
    // One thread per chain; results land in chain order so the merge below
    // is independent of scheduling.
    std::vector<std::optional<AnnealResult>> slots(seeds.size());
    std::vector<std::exception_ptr> errors(seeds.size());
    std::vector<std::thread> workers;
    for (std::size_t i = 0; i < seeds.size(); ++i)
      workers.emplace_back([&, i] {
        try {
          AnnealerConfig chain_cfg = cfg.annealer;
          chain_cfg.seed = seeds[i];
          slots[i] = qtam_run(evaluator, chain_cfg, &counters);
        } catch (...) {
          errors[i] = std::current_exception();
        }
      });
    for (auto& w : workers) w.join();
    for (const auto& err : errors)
      if (err) std::rethrow_exception(err);
    for (auto& slot : slots) results.push_back(std::move(*slot));
  }

  RunOutput out{ParetoArchive(cfg.annealer.archive_capacity), {}, {}, {},
                std::move(seeds), 0, 0};
  for (const auto& r : results) out.ranges.merge(r.ranges);
  bool have_best = false;
  for (auto& r : results) {
    for (const auto& member : r.archive.members())
      out.archive.insert(member, out.ranges, nullptr);
    if (!have_best || r.best_scalar.eval.scalar < out.best.eval.scalar) {
      out.best = r.best_scalar;
      have_best = true;
    }
    out.traces.push_back(std::move(r.trace));
  }
  out.dominance_evaluations = counters.dominance_evaluations.load();
  out.archive_comparisons = counters.archive_comparisons.load();
  return out;
}

}  // namespace qtam
