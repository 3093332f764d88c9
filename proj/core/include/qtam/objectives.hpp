#pragma once

#include <array>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qtam/circuit.hpp"

namespace qtam {

/// The five minimized layout figures, in fixed order:
///   [0] quantum-gate area (bounding-box height x occupied layers)
///   [1] total quantum wire area
///   [2] negated objective-function expectation (so smaller is better)
///   [3] input size n
///   [4] measurement cost (rounds x gates measured)
struct ObjectiveVector {
  std::array<double, 5> f{};
  bool operator==(const ObjectiveVector&) const = default;
};

/// Soft-constraint bookkeeping. Every entry is non-positive: 0 satisfied,
/// negative violated. Positive entries are malformed and rejected by
/// violation_sums.
struct ViolationSet {
  std::vector<double> constraints;  ///< g entries (symmetry, routing, layout)
  std::vector<double> closeness;    ///< c entries (distribution distance)
};

/// Summed g and c violations; throws std::invalid_argument on a positive
/// entry.
std::pair<double, double> violation_sums(const ViolationSet& v);

/// Running per-objective ranges used to normalize dominance distances and
/// crowding. A span collapses to 1 until two distinct values were seen.
class RangeTracker {
 public:
  void observe(const ObjectiveVector& f);
  void merge(const RangeTracker& other);
  std::array<double, 5> ranges() const;
  double range(int i) const;
  bool empty() const { return !any_; }

 private:
  std::array<double, 5> lo_{};
  std::array<double, 5> hi_{};
  bool any_ = false;
};

/// Gate area: bounding-box height of all placed footprints times the number
/// of layers carrying at least one instance. Empty solutions cost 0.
double area_f1(const CircuitSpec& spec, const Solution& s);

/// Straight-line length between two grid cells: |dx| + |dy| plus the layer
/// distance weighted by the via factor.
double wire_length(const GridVertex& a, const GridVertex& b, double via_cost);

/// Total wire area: sum of length * width over the given wires. Also covers
/// the amplitude-weighted simplification when callers pass |psi| as width.
double wire_area_f2(std::span<const std::pair<double, double>> length_width);

/// Mirror-line residuals, one non-positive entry per symmetry-constrained
/// gate pair (and per self-symmetric gate), zero when exactly mirrored.
std::vector<double> symmetry_violations(const CircuitSpec& spec,
                                        const Solution& s);

/// Measurement cost: rounds times measured gates.
double measurement_f5(const Solution& s);

/// Weighted scalarization: sum of alpha[i] * f[i] plus optional weighted
/// secondary terms appended as (weight, value) pairs.
double scalarized_cost(const ObjectiveVector& f,
                       std::span<const double> alpha,
                       std::span<const std::pair<double, double>> secondary);

}  // namespace qtam
