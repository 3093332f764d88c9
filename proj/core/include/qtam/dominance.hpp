#pragma once

#include <span>

#include "qtam/objectives.hpp"

namespace qtam {

enum class DominanceOutcome { XDominatesY, YDominatesX, Mutual };

/// Signed distance plus the relation it implies, for one measure.
struct DominanceResult {
  double d = 0.0;
  DominanceOutcome outcome = DominanceOutcome::Mutual;
};

/// Relative entropy D(P || Q) in bits. Zero P terms contribute nothing; Q is
/// floored so the divergence stays finite on empty reference cells.
double relative_entropy(std::span<const double> p, std::span<const double> q);

/// Closeness measure: d = c(x) - c(y). x dominates y when both violate and
/// x violates less, or x satisfies while y violates.
DominanceResult closeness_dominance(double c_x, double c_y);

/// Constraint measure with the same shape over summed g violations.
DominanceResult constraint_dominance(double g_x, double g_y);

/// Objective measure: d multiplies the range-normalized gaps over every
/// objective where the two differ (1 when they all tie). x dominates y when
/// it is nowhere worse and somewhere strictly better.
DominanceResult objective_dominance(const ObjectiveVector& x,
                                    const ObjectiveVector& y,
                                    std::span<const double> ranges);

/// Lightweight view of one solution for ranking purposes.
struct RankView {
  double closeness = 0.0;   ///< summed c violations (<= 0)
  double constraint = 0.0;  ///< summed g violations (<= 0)
  ObjectiveVector f;
};

/// Full ordering: closeness decides first, then constraints, then the
/// objective vector.
DominanceOutcome pareto_check(const RankView& x, const RankView& y,
                              std::span<const double> ranges);

}  // namespace qtam
