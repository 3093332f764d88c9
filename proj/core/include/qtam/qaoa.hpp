#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "qtam/circuit.hpp"

namespace qtam {

/// Dense state vector over n two-level systems; basis state z indexes
/// amplitudes[z] with system 0 as the least significant bit.
struct StateVector {
  std::vector<std::complex<double>> amplitudes;
  int num_systems = 0;

  static std::size_t bytes_required(int n);
};

/// Refuse to allocate state vectors at or above this many bytes unless the
/// caller raises the budget explicitly.
inline constexpr std::size_t kDefaultStateBudget = std::size_t{512} << 20;

/// Diagonal objective: one real value per basis state, plus the edge list it
/// was built from (empty when constructed directly from values).
struct DiagonalObjective {
  std::vector<double> values;
  std::vector<std::pair<int, int>> edges;
  int num_systems = 0;
};

/// Cut-counting objective of a problem graph: value(z) = number of edges
/// whose endpoints disagree in z.
DiagonalObjective cut_objective(const ProblemGraph& graph);

/// Equal superposition over all basis states. Throws CapacityError when the
/// state would not fit the budget and std::invalid_argument for d != 2.
StateVector uniform_superposition(int n, int basis_dim = 2,
                                  std::size_t budget = kDefaultStateBudget);

/// Multiply each amplitude by exp(-i * gamma * value(z)).
StateVector apply_phase_unitary(StateVector psi, const DiagonalObjective& c,
                                double gamma);

/// Per-edge phase separation: exp(+i * gamma_e * Z_j Z_k) applied for every
/// edge e = (j, k) with its own angle.
StateVector apply_edge_phase(StateVector psi,
                             std::span<const std::pair<int, int>> edges,
                             std::span<const double> gamma);

/// Single-system transverse rotations exp(-i * mu_q * X_q) for every q.
StateVector apply_mixer_unitary(StateVector psi, std::span<const double> mu);

/// Full alternation: for t = 0..u-1 apply the per-edge phase collection,
/// then the mixer collection.
StateVector evolve(const ProblemGraph& graph, const ParameterCollections& pc,
                   std::size_t budget = kDefaultStateBudget);

/// <psi| C |psi> for a diagonal objective.
double expectation(const StateVector& psi, const DiagonalObjective& c);

/// Measurement distribution |amplitude|^2 per basis state.
std::vector<double> output_distribution(const StateVector& psi);

struct MaximizeResult {
  ParameterCollections params;
  double value = 0.0;
  int evaluations = 0;  ///< state-vector evaluations spent
};

/// Maximize the expected cut over the angle box [0, pi]^(u*(n+m)) with a
/// budgeted multi-start coordinate search. Deterministic for a fixed seed;
/// `budget` caps the number of state evolutions.
MaximizeResult maximize_objective(const ProblemGraph& graph, int depth,
                                  int budget, std::uint64_t seed,
                                  std::size_t memory_budget =
                                      kDefaultStateBudget);

}  // namespace qtam
