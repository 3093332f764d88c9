#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "qtam/annealer.hpp"
#include "qtam/evaluator.hpp"
#include "qtam/qaoa.hpp"

namespace qtam {

struct QaoaOptions {
  int depth = 1;
  int budget = 400;  ///< state evolutions allowed to the angle search
  std::size_t memory_budget = kDefaultStateBudget;
};

/// Everything one optimization run needs besides the circuit.
struct RunConfig {
  AnnealerConfig annealer;
  int chains = 1;
  /// Explicit per-chain seeds; empty derives seed + i for chain i.
  std::vector<std::uint64_t> seeds;
  EvaluationSettings evaluation;
  QaoaOptions qaoa;
};

RunConfig default_config();

/// Parse a run configuration; unknown keys are ignored, bad values throw
/// ConfigError.
RunConfig parse_config(const std::string& json_text);
RunConfig load_config(const std::string& path);

/// Stable hex fingerprint over every field that affects results.
std::string config_hash(const RunConfig& cfg);

}  // namespace qtam
