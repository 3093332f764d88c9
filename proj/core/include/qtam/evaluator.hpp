#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qtam/circuit.hpp"
#include "qtam/objectives.hpp"
#include "qtam/qaoa.hpp"
#include "qtam/wire_refine.hpp"

namespace qtam {

/// Everything the scoring pass needs besides the circuit itself.
struct EvaluationSettings {
  std::array<double, 5> alpha{1.0, 1.0, 1.0, 1.0, 1.0};
  /// Extra weighted figures appended to the scalarization. Known names:
  /// "divergence", "route_cost", "wire_amplitude_area".
  std::vector<std::pair<std::string, double>> secondary;
  double closeness_epsilon = 0.05;
  DeviceConstants device;
  double via_cost = 2.0;
  std::size_t memory_budget = kDefaultStateBudget;
};

/// Full score of one solution.
struct Evaluation {
  ObjectiveVector objectives;
  ViolationSet violations;
  double g_sum = 0.0;  ///< summed constraint violations (<= 0)
  double c_sum = 0.0;  ///< summed closeness violations (<= 0)
  double expectation = 0.0;
  std::vector<double> distribution;
  double divergence = 0.0;  ///< reference-to-output relative entropy
  double route_cost = 0.0;
  double wire_amplitude_area = 0.0;
  double scalar = 0.0;
};

/// Scores solutions against one circuit. Construction resolves the
/// reference distribution (explicit, or evolved from the reference circuit)
/// and rejects basis dimensions the engine cannot evolve.
class Evaluator {
 public:
  Evaluator(const CircuitSpec& spec, EvaluationSettings settings);

  /// Routes the solution first when its routes are stale (in place), then
  /// scores it.
  Evaluation evaluate(Solution& s) const;

  const CircuitSpec& spec() const { return *spec_; }
  const EvaluationSettings& settings() const { return settings_; }
  /// Empty when the circuit defines no closeness reference.
  const std::vector<double>& reference() const { return reference_; }

 private:
  const CircuitSpec* spec_;
  EvaluationSettings settings_;
  DiagonalObjective cut_;
  std::vector<double> reference_;
};

}  // namespace qtam
