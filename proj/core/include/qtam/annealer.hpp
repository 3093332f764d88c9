#pragma once

#include <array>
#include <atomic>
#include <cstdint>
#include <span>
#include <vector>

#include "qtam/circuit.hpp"
#include "qtam/dominance.hpp"
#include "qtam/evaluator.hpp"
#include "qtam/rng.hpp"

namespace qtam {

/// Exponential cooling: value(t) = t_max * exp(-rate * t / scale).
struct TemperatureSchedule {
  double t_max = 1.0;
  double rate = 1.0;
  double scale = 1.0;
  double at(double t) const;
};

/// Work counters, shared across chains. Dominance evaluations are charged
/// per measure triple so they compare directly against the analytic bound.
struct OpCounters {
  std::atomic<std::uint64_t> dominance_evaluations{0};
  std::atomic<std::uint64_t> archive_comparisons{0};
};

struct AnnealerConfig {
  int iterations = 1000;
  std::uint64_t seed = 1;
  int archive_capacity = 16;
  int qaoa_depth = 1;
  TemperatureSchedule t_objective;   ///< tempers objective regressions
  TemperatureSchedule t_constraint;  ///< tempers constraint regressions
  TemperatureSchedule t_closeness;   ///< tempers closeness regressions
  /// Draw weights for the six move kinds, in order: relocate, layer change,
  /// rotation, symmetric pair placement, separation choice, angle nudge.
  std::array<double, 6> move_weights{3.0, 1.0, 1.0, 1.0, 1.0, 3.0};
  double angle_sigma = 0.1;
  int move_retry_limit = 32;
  bool record_trace = true;
};

struct EvaluatedSolution {
  Solution solution;
  Evaluation eval;
  RankView rank() const { return {eval.c_sum, eval.g_sum, eval.objectives}; }
};

// ---------------------------------------------------------------------------
// Acceptance probabilities

/// Clamp an exponent so exp() neither overflows nor denormalizes the
/// acceptance probability.
double clamp_exponent(double e);

/// Probability of accepting a dominated candidate: the averaged objective,
/// constraint and closeness gaps each scaled by their own temperature.
double acceptance_dominated(double d_f, double d_g, double d_c, double t_f,
                            double t_g, double t_c);

/// Probability of swapping to the least-distant archive dominator.
double acceptance_min_gap(double d_min);

struct AverageDominance {
  double f = 0.0;
  double g = 0.0;
  double c = 0.0;
};

/// Averaged dominance gaps of candidate `nu` against the current point `xi`
/// and the archive members dominating `nu` (k of them; k = 0 is fine).
AverageDominance average_dominances(const RankView& nu, const RankView& xi,
                                    std::span<const RankView> dominators,
                                    std::span<const double> ranges);

// ---------------------------------------------------------------------------
// Archive

/// Bounded set of mutually nondominating scored solutions. Pruning keeps the
/// entries with the largest crowding distance (boundary points are infinite).
class ParetoArchive {
 public:
  explicit ParetoArchive(int capacity);

  const std::vector<EvaluatedSolution>& members() const { return members_; }
  int capacity() const { return capacity_; }
  bool empty() const { return members_.empty(); }
  int size() const { return static_cast<int>(members_.size()); }

  /// Insert unless a member dominates (or structurally equals) the
  /// candidate; members the candidate dominates are removed; over-capacity
  /// archives are crowding-pruned.
  void insert(EvaluatedSolution es, const RangeTracker& ranges,
              OpCounters* counters = nullptr);

  /// Crowding distance per member, in member order.
  std::vector<double> crowding_distances() const;

  /// Invariant probe: every pair mutually nondominating.
  bool mutually_nondominating(const RangeTracker& ranges) const;

 private:
  int capacity_;
  std::vector<EvaluatedSolution> members_;
};

// ---------------------------------------------------------------------------
// Annealing loop

enum class StepCase : char {
  DominatedByCurrent = 'a',   ///< current point dominates the candidate
  DominatedByArchive = 'b',   ///< mutual vs current, dominated in archive
  NondominatedInsert = 'c',   ///< mutual everywhere: adopt and insert
  DominatesArchive = 'd',     ///< mutual vs current, dominates members
  MinGapSwap = 'e',           ///< candidate improves current yet is dominated
  ImprovedInsert = 'f',       ///< candidate improves current, mutual in archive
  ImprovedSweep = 'g',        ///< candidate improves current and members
  MoveRejected = 'r',         ///< no applicable move found this iteration
};

struct TraceRow {
  int iteration = 0;
  StepCase step = StepCase::MoveRejected;
  double probability = 0.0;  ///< acceptance probability where one was drawn
  bool accepted = false;     ///< the walking point changed
  int archive_size = 0;
};

struct AnnealResult {
  ParetoArchive archive;
  std::vector<TraceRow> trace;
  RangeTracker ranges;
  EvaluatedSolution best_scalar;  ///< lowest weighted sum seen anywhere
  std::uint64_t dominance_evaluations = 0;
  std::uint64_t archive_comparisons = 0;
};

/// One full annealing chain. Deterministic for a fixed config.
AnnealResult qtam_run(const Evaluator& evaluator, const AnnealerConfig& cfg,
                      OpCounters* shared_counters = nullptr);

}  // namespace qtam
