#include "qtam/router.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <set>
#include <stdexcept>

#include "qtam/objectives.hpp"

namespace qtam {

GridGraph::GridGraph(int width, int height, int layers, double via_cost)
    : width_(width), height_(height), layers_(layers), via_cost_(via_cost) {
  if (width < 1 || height < 1 || layers < 1)
    throw std::invalid_argument("grid dimensions must be >= 1");
  if (via_cost < 0.0)
    throw std::invalid_argument("via cost must be >= 0");
  blocked_.assign(static_cast<std::size_t>(vertex_count()), 0);
}

GridGraph GridGraph::from_spec(const CircuitSpec& spec, double via_cost) {
  GridGraph g(spec.grid_width, spec.grid_height, spec.num_layers, via_cost);
  for (const auto& blk : spec.blockages)
    for (const auto& c : blk.cells) g.block({c.x, c.y, blk.layer});
  return g;
}

bool GridGraph::in_bounds(const GridVertex& v) const {
  return v.x >= 0 && v.x < width_ && v.y >= 0 && v.y < height_ &&
         v.layer >= 1 && v.layer <= layers_;
}

int GridGraph::index(const GridVertex& v) const {
  return ((v.layer - 1) * height_ + v.y) * width_ + v.x;
}

GridVertex GridGraph::vertex(int index) const {
  GridVertex v;
  v.x = index % width_;
  index /= width_;
  v.y = index % height_;
  v.layer = index / height_ + 1;
  return v;
}

void GridGraph::block(const GridVertex& v) {
  if (!in_bounds(v)) throw std::invalid_argument("blocked cell out of bounds");
  blocked_[static_cast<std::size_t>(index(v))] = 1;
}

bool GridGraph::blocked(const GridVertex& v) const {
  return blocked_[static_cast<std::size_t>(index(v))] != 0;
}

void GridGraph::neighbors(
    const GridVertex& v,
    std::vector<std::pair<GridVertex, double>>& out) const {
  out.clear();
  static constexpr int kStep[8][2] = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0},
                                      {1, 0},   {-1, 1}, {0, 1},  {1, 1}};
  for (const auto& [dx, dy] : kStep) {
    const GridVertex w{v.x + dx, v.y + dy, v.layer};
    if (!in_bounds(w) || blocked(w)) continue;
    out.emplace_back(w, static_cast<double>(std::abs(dx) + std::abs(dy)));
  }
  for (int dz : {-1, 1}) {
    const GridVertex w{v.x, v.y, v.layer + dz};
    if (!in_bounds(w) || blocked(w)) continue;
    out.emplace_back(w, via_cost_);
  }
}

namespace {

RouteResult unreachable_route() {
  RouteResult r;
  r.unreachable = true;
  return r;
}

}  // namespace

RouteResult qspa_shortest_path(const GridGraph& grid, const GridVertex& src,
                               const GridVertex& dst) {
  if (!grid.in_bounds(src) || !grid.in_bounds(dst) || grid.blocked(src) ||
      grid.blocked(dst))
    return unreachable_route();

  const int n = grid.vertex_count();
  const int goal = grid.index(dst);
  std::vector<double> dist(static_cast<std::size_t>(n),
                           std::numeric_limits<double>::infinity());
  std::vector<int> parent(static_cast<std::size_t>(n), -1);
  std::vector<char> settled(static_cast<std::size_t>(n), 0);

  const auto heuristic = [&](const GridVertex& v) {
    return wire_length(v, dst, grid.via_cost());
  };

  // Min-heap on (g + h, vertex id); the id component pins the expansion
  // order so equal-cost routes come out identically on every run.
  using Entry = std::pair<double, int>;
  std::priority_queue<Entry, std::vector<Entry>, std::greater<>> open;

  const int start = grid.index(src);
  dist[static_cast<std::size_t>(start)] = 0.0;
  open.emplace(heuristic(src), start);

  std::vector<std::pair<GridVertex, double>> adj;
  while (!open.empty()) {
    const auto [f, u] = open.top();
    open.pop();
    if (settled[static_cast<std::size_t>(u)]) continue;
    settled[static_cast<std::size_t>(u)] = 1;
    if (u == goal) break;
    const GridVertex uv = grid.vertex(u);
    grid.neighbors(uv, adj);
    for (const auto& [w, cost] : adj) {
      const int wi = grid.index(w);
      const double g = dist[static_cast<std::size_t>(u)] + cost;
      if (g < dist[static_cast<std::size_t>(wi)]) {
        dist[static_cast<std::size_t>(wi)] = g;
        parent[static_cast<std::size_t>(wi)] = u;
        open.emplace(g + heuristic(w), wi);
      }
    }
  }

  if (!settled[static_cast<std::size_t>(goal)]) return unreachable_route();

  RouteResult r;
  r.cost = dist[static_cast<std::size_t>(goal)];
  std::vector<GridVertex> path;
  for (int v = goal; v != -1; v = parent[static_cast<std::size_t>(v)])
    path.push_back(grid.vertex(v));
  std::reverse(path.begin(), path.end());
  r.segments.push_back(std::move(path));
  return r;
}

namespace {

/// Candidate split locations: the terminals themselves, the bounding-box
/// perimeter, and the corner cells of each source->sink rectangle, repeated
/// on every terminal layer.
std::vector<GridVertex> candidate_points(const GridGraph& grid,
                                         const GridVertex& src,
                                         const GridVertex& sink1,
                                         const GridVertex& sink2) {
  const int x_lo = std::min({src.x, sink1.x, sink2.x});
  const int x_hi = std::max({src.x, sink1.x, sink2.x});
  const int y_lo = std::min({src.y, sink1.y, sink2.y});
  const int y_hi = std::max({src.y, sink1.y, sink2.y});
  std::set<int> layers{src.layer, sink1.layer, sink2.layer};

  std::set<int> seen;
  std::vector<GridVertex> out;
  const auto add = [&](GridVertex v) {
    if (!grid.in_bounds(v) || grid.blocked(v)) return;
    if (seen.insert(grid.index(v)).second) out.push_back(v);
  };

  for (int z : layers) {
    add({src.x, src.y, z});
    add({sink1.x, sink1.y, z});
    add({sink2.x, sink2.y, z});
    for (const auto& sink : {sink1, sink2}) {
      add({src.x, sink.y, z});
      add({sink.x, src.y, z});
    }
    for (int x = x_lo; x <= x_hi; ++x) {
      add({x, y_lo, z});
      add({x, y_hi, z});
    }
    for (int y = y_lo; y <= y_hi; ++y) {
      add({x_lo, y, z});
      add({x_hi, y, z});
    }
  }
  return out;
}

}  // namespace

std::vector<SeparationCandidate> rank_separation_points(
    const GridGraph& grid, const GridVertex& src, const GridVertex& sink1,
    const GridVertex& sink2, const SegmentObjective& objective) {
  constexpr std::size_t kMaxCandidates = 64;

  auto points = candidate_points(grid, src, sink1, sink2);
  // Pre-rank by a straight-line bound on the through-cost so the expensive
  // searches only run for the most promising 64 cells.
  std::sort(points.begin(), points.end(),
            [&](const GridVertex& a, const GridVertex& b) {
              const double ca = wire_length(src, a, grid.via_cost()) +
                                wire_length(a, sink1, grid.via_cost()) +
                                wire_length(a, sink2, grid.via_cost());
              const double cb = wire_length(src, b, grid.via_cost()) +
                                wire_length(b, sink1, grid.via_cost()) +
                                wire_length(b, sink2, grid.via_cost());
              if (ca != cb) return ca < cb;
              return grid.index(a) < grid.index(b);
            });
  if (points.size() > kMaxCandidates) points.resize(kMaxCandidates);

  std::vector<SeparationCandidate> ranked;
  for (const auto& p : points) {
    const auto leg0 = qspa_shortest_path(grid, src, p);
    if (leg0.unreachable) continue;
    const auto leg1 = qspa_shortest_path(grid, p, sink1);
    if (leg1.unreachable) continue;
    const auto leg2 = qspa_shortest_path(grid, p, sink2);
    if (leg2.unreachable) continue;

    SeparationCandidate c;
    c.point = p;
    c.cost = leg0.cost + leg1.cost + leg2.cost;
    c.overlap = leg0.cost;
    if (objective)
      c.objective = objective(src, p) + objective(p, sink1) +
                    objective(p, sink2);
    c.route.segments = {leg0.segments[0], leg1.segments[0], leg2.segments[0]};
    c.route.cost = c.cost;
    c.route.overlap = c.overlap;
    c.route.separation = p;
    ranked.push_back(std::move(c));
  }

  std::sort(ranked.begin(), ranked.end(),
            [&](const SeparationCandidate& a, const SeparationCandidate& b) {
              if (a.objective != b.objective) return a.objective > b.objective;
              if (a.cost != b.cost) return a.cost < b.cost;
              if (a.overlap != b.overlap) return a.overlap > b.overlap;
              return grid.index(a.point) < grid.index(b.point);
            });
  return ranked;
}

RouteResult route_with_separation(const GridGraph& grid, const GridVertex& src,
                                  const GridVertex& sink1,
                                  const GridVertex& sink2,
                                  const SegmentObjective& objective,
                                  int choice) {
  const auto ranked = rank_separation_points(grid, src, sink1, sink2,
                                             objective);
  if (ranked.empty()) return unreachable_route();
  const std::size_t pick =
      std::min(static_cast<std::size_t>(std::max(choice, 0)),
               ranked.size() - 1);
  return ranked[pick].route;
}

Solution route_all(const CircuitSpec& spec, Solution s, double via_cost,
                   const SegmentObjective& objective) {
  const GridGraph grid = GridGraph::from_spec(spec, via_cost);
  s.routes.assign(spec.nets.size(), RouteResult{});

  for (std::size_t i = 0; i < spec.nets.size(); ++i) {
    const auto& net = spec.nets[i];
    std::vector<GridVertex> sources;
    std::vector<GridVertex> sinks;
    for (const auto& p : net.sources)
      sources.push_back(port_vertex(spec, s, p));
    for (const auto& p : net.sinks) sinks.push_back(port_vertex(spec, s, p));
    if (sources.empty() || sinks.empty()) {
      s.routes[i] = unreachable_route();
      continue;
    }
    const int choice =
        i < s.route_choice.size() ? s.route_choice[i] : 0;

    RouteResult r;
    if (sinks.size() == 1) {
      r = qspa_shortest_path(grid, sources[0], sinks[0]);
    } else {
      r = route_with_separation(grid, sources[0], sinks[0], sinks[1],
                                objective, choice);
      // Tie any further sinks straight to the source.
      for (std::size_t k = 2; k < sinks.size() && !r.unreachable; ++k) {
        const auto leg = qspa_shortest_path(grid, sources[0], sinks[k]);
        if (leg.unreachable) {
          r.unreachable = true;
          break;
        }
        r.cost += leg.cost;
        r.segments.push_back(leg.segments[0]);
      }
    }
    // Secondary sources join at the first sink.
    for (std::size_t k = 1; k < sources.size() && !r.unreachable; ++k) {
      const auto leg = qspa_shortest_path(grid, sources[k], sinks[0]);
      if (leg.unreachable) {
        r.unreachable = true;
        break;
      }
      r.cost += leg.cost;
      r.segments.push_back(leg.segments[0]);
    }
    s.routes[i] = std::move(r);
  }

  s.routes_stale = false;
  return s;
}

}  // namespace qtam
