#pragma once

#include <functional>
#include <span>
#include <vector>

#include "qtam/circuit.hpp"

namespace qtam {

/// Routing grid: W x H cells on each of r layers. Cells connect to their 8
/// in-layer neighbors (cost = rectilinear length of the hop, so diagonals
/// cost 2) and to the same cell one layer up or down (cost = via_cost).
class GridGraph {
 public:
  GridGraph(int width, int height, int layers, double via_cost);

  /// Grid of a circuit: dimensions from the spec, blockages applied.
  static GridGraph from_spec(const CircuitSpec& spec, double via_cost);

  int width() const { return width_; }
  int height() const { return height_; }
  int layers() const { return layers_; }
  double via_cost() const { return via_cost_; }

  bool in_bounds(const GridVertex& v) const;
  void block(const GridVertex& v);
  bool blocked(const GridVertex& v) const;

  /// Stable linear id: x fastest, then y, then layer.
  int index(const GridVertex& v) const;
  GridVertex vertex(int index) const;
  int vertex_count() const { return width_ * height_ * layers_; }

  /// Unblocked neighbors with edge costs, in a fixed enumeration order.
  void neighbors(const GridVertex& v,
                 std::vector<std::pair<GridVertex, double>>& out) const;

 private:
  int width_;
  int height_;
  int layers_;
  double via_cost_;
  std::vector<char> blocked_;
};

/// Optional per-segment objective gain used when choosing separation points.
using SegmentObjective =
    std::function<double(const GridVertex&, const GridVertex&)>;

/// Cheapest path between two cells (A* with an admissible straight-line
/// heuristic). Unreachable pairs come back flagged, not thrown.
RouteResult qspa_shortest_path(const GridGraph& grid, const GridVertex& src,
                               const GridVertex& dst);

/// One scored candidate split point for a 1-source/2-sink net.
struct SeparationCandidate {
  GridVertex point;
  double cost = 0.0;       ///< summed path cost through the split
  double overlap = 0.0;    ///< source->split cost shared by both branches
  double objective = 0.0;  ///< summed segment objective
  RouteResult route;
};

/// Rank all candidate separation points for src -> {sink1, sink2}, best
/// first: highest objective, then lowest cost, then largest overlap, then
/// smallest vertex id. Empty when nothing is reachable.
std::vector<SeparationCandidate> rank_separation_points(
    const GridGraph& grid, const GridVertex& src, const GridVertex& sink1,
    const GridVertex& sink2, const SegmentObjective& objective);

/// Route of a 1-source/2-sink net through its best (or rank-chosen)
/// separation point.
RouteResult route_with_separation(const GridGraph& grid, const GridVertex& src,
                                  const GridVertex& sink1,
                                  const GridVertex& sink2,
                                  const SegmentObjective& objective,
                                  int choice = 0);

/// Route every net of the solution, honoring per-net separation choices.
/// Never throws for unreachable terminals; those nets are flagged so the
/// evaluator can charge a routing violation.
Solution route_all(const CircuitSpec& spec, Solution s, double via_cost,
                   const SegmentObjective& objective = {});

}  // namespace qtam
