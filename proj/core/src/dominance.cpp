#include "qtam/dominance.hpp"

#include <cmath>
#include <stdexcept>

namespace qtam {

namespace {

// Reference cells with no mass are floored here so the divergence stays
// finite; solution mass on such a cell is then heavily (not infinitely)
// penalized.
constexpr double kQFloor = 1e-12;

DominanceResult violation_dominance(double x, double y) {
  if (x > 0.0 || y > 0.0)
    throw std::invalid_argument("violation values must be <= 0");
  DominanceResult r;
  r.d = x - y;
  const bool x_dom = (x < 0.0 && y < 0.0 && x > y) || (x == 0.0 && y < 0.0);
  const bool y_dom = (x < 0.0 && y < 0.0 && y > x) || (y == 0.0 && x < 0.0);
  if (x_dom)
    r.outcome = DominanceOutcome::XDominatesY;
  else if (y_dom)
    r.outcome = DominanceOutcome::YDominatesX;
  else
    r.outcome = DominanceOutcome::Mutual;
  return r;
}

}  // namespace

double relative_entropy(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size())
    throw std::invalid_argument("distributions must share a length");
  double acc = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 0.0 || q[i] < 0.0)
      throw std::invalid_argument("distribution entries must be >= 0");
    if (p[i] == 0.0) continue;
    acc += p[i] * std::log2(p[i] / std::max(q[i], kQFloor));
  }
  return acc;
}

DominanceResult closeness_dominance(double c_x, double c_y) {
  return violation_dominance(c_x, c_y);
}

DominanceResult constraint_dominance(double g_x, double g_y) {
  return violation_dominance(g_x, g_y);
}

DominanceResult objective_dominance(const ObjectiveVector& x,
                                    const ObjectiveVector& y,
                                    std::span<const double> ranges) {
  if (ranges.size() != 5)
    throw std::invalid_argument("objective dominance needs 5 ranges");
  DominanceResult r;
  r.d = 1.0;
  bool all_le = true;
  bool all_ge = true;
  bool any_lt = false;
  bool any_gt = false;
  for (int i = 0; i < 5; ++i) {
    if (ranges[i] <= 0.0)
      throw std::invalid_argument("objective ranges must be positive");
    if (x.f[i] != y.f[i]) r.d *= std::abs(x.f[i] - y.f[i]) / ranges[i];
    if (x.f[i] < y.f[i]) any_lt = true;
    if (x.f[i] > y.f[i]) {
      any_gt = true;
      all_le = false;
    }
    if (y.f[i] > x.f[i]) all_ge = false;
  }
  if (all_le && any_lt)
    r.outcome = DominanceOutcome::XDominatesY;
  else if (all_ge && any_gt)
    r.outcome = DominanceOutcome::YDominatesX;
  else
    r.outcome = DominanceOutcome::Mutual;
  return r;
}

DominanceOutcome pareto_check(const RankView& x, const RankView& y,
                              std::span<const double> ranges) {
  const auto c = closeness_dominance(x.closeness, y.closeness);
  if (c.outcome != DominanceOutcome::Mutual) return c.outcome;
  const auto g = constraint_dominance(x.constraint, y.constraint);
  if (g.outcome != DominanceOutcome::Mutual) return g.outcome;
  return objective_dominance(x.f, y.f, ranges).outcome;
}

}  // namespace qtam
