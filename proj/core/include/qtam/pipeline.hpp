#pragma once

#include <cstdint>
#include <vector>

#include "qtam/annealer.hpp"
#include "qtam/config.hpp"

namespace qtam {

/// Merged result of one optimization run (one or more chains).
struct RunOutput {
  ParetoArchive archive;
  RangeTracker ranges;
  EvaluatedSolution best;  ///< lowest weighted sum across every chain
  std::vector<std::vector<TraceRow>> traces;  ///< per chain
  std::vector<std::uint64_t> seeds;           ///< per chain, in order
  std::uint64_t dominance_evaluations = 0;
  std::uint64_t archive_comparisons = 0;
};

/// Run every chain (deterministically seeded), then merge the archives into
/// one nondominated front. Results are byte-stable for a fixed config.
RunOutput run_optimization(const CircuitSpec& spec, const RunConfig& cfg);

}  // namespace qtam
