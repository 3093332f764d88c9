#include "qtam/circuit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

#include "qtam/errors.hpp"
#include "qtam/rng.hpp"

namespace qtam {

namespace {

// Perimeter walk of an unrotated w x h footprint, starting at the
// bottom-left cell: up the left edge, along the far edge, back down and
// home along the near edge. Degenerate (single row/column) shapes visit
// every cell exactly once.
std::vector<GridPos> perimeter_cells(int w, int h) {
  std::vector<GridPos> cells;
  for (int y = 0; y < h; ++y) cells.push_back({0, y});
  if (w > 1)
    for (int x = 1; x < w; ++x) cells.push_back({x, h - 1});
  if (w > 1 && h > 1)
    for (int y = h - 2; y >= 0; --y) cells.push_back({w - 1, y});
  if (h > 1)
    for (int x = w - 2; x >= 1; --x) cells.push_back({x, 0});
  return cells;
}

GridPos rotate_offset(GridPos off, int w, int h, Rotation r) {
  switch (r) {
    case Rotation::R0:
      return off;
    case Rotation::R90:
      return {off.y, w - 1 - off.x};
    case Rotation::R180:
      return {w - 1 - off.x, h - 1 - off.y};
    case Rotation::R270:
      return {h - 1 - off.y, off.x};
  }
  return off;
}

bool rects_intersect(GridPos a, int aw, int ah, GridPos b, int bw, int bh) {
  return a.x < b.x + bw && b.x < a.x + aw && a.y < b.y + bh && b.y < a.y + ah;
}

bool cell_in_rect(GridPos c, GridPos p, int w, int h) {
  return c.x >= p.x && c.x < p.x + w && c.y >= p.y && c.y < p.y + h;
}

/// True when `p` is a legal placement for `g`: inside the grid, clear of
/// blockages on its layer, and not overlapping any other instance on that
/// layer. `skip_a`/`skip_b` are instance indices excluded from the overlap
/// test (the instances being moved).
bool placement_fits(const CircuitSpec& spec,
                    const std::vector<GateInstance>& instances,
                    const Solution& s, const GateSpec& g, const Placement& p,
                    int skip_a, int skip_b) {
  const auto [fw, fh] = footprint(g, p.rotation);
  if (p.layer < 1 || p.layer > spec.num_layers) return false;
  if (p.pos.x < 0 || p.pos.y < 0 || p.pos.x + fw > spec.grid_width ||
      p.pos.y + fh > spec.grid_height)
    return false;
  for (const auto& blk : spec.blockages) {
    if (blk.layer != p.layer) continue;
    for (const auto& c : blk.cells)
      if (cell_in_rect(c, p.pos, fw, fh)) return false;
  }
  for (std::size_t i = 0; i < instances.size(); ++i) {
    if (static_cast<int>(i) == skip_a || static_cast<int>(i) == skip_b)
      continue;
    const auto& other = s.placements[i];
    if (other.layer != p.layer) continue;
    const auto& og = spec.gates[instances[i].gate];
    const auto [ow, oh] = footprint(og, other.rotation);
    if (rects_intersect(p.pos, fw, fh, other.pos, ow, oh)) return false;
  }
  return true;
}

}  // namespace

int CircuitSpec::gate_index(const std::string& id) const {
  for (std::size_t i = 0; i < gates.size(); ++i)
    if (gates[i].id == id) return static_cast<int>(i);
  return -1;
}

std::vector<GateInstance> materialize_instances(const CircuitSpec& spec) {
  std::vector<GateInstance> out;
  for (std::size_t g = 0; g < spec.gates.size(); ++g)
    for (std::size_t o = 0; o < spec.gates[g].rounds.size(); ++o)
      out.push_back({static_cast<int>(g), static_cast<int>(o)});
  return out;
}

int instance_index(const CircuitSpec& spec, int gate, int ordinal) {
  int idx = 0;
  for (int g = 0; g < gate; ++g)
    idx += static_cast<int>(spec.gates[g].rounds.size());
  return idx + ordinal;
}

std::pair<int, int> footprint(const GateSpec& gate, Rotation r) {
  if (r == Rotation::R90 || r == Rotation::R270)
    return {gate.height, gate.width};
  return {gate.width, gate.height};
}

GridPos port_offset(const GateSpec& gate, int port, Rotation r) {
  const auto cells = perimeter_cells(gate.width, gate.height);
  const GridPos raw = cells[static_cast<std::size_t>(port) % cells.size()];
  return rotate_offset(raw, gate.width, gate.height, r);
}

std::vector<GridPos> covered_cells(const GateSpec& gate, const Placement& p) {
  const auto [fw, fh] = footprint(gate, p.rotation);
  std::vector<GridPos> cells;
  cells.reserve(static_cast<std::size_t>(fw) * fh);
  for (int y = 0; y < fh; ++y)
    for (int x = 0; x < fw; ++x)
      cells.push_back({p.pos.x + x, p.pos.y + y});
  return cells;
}

bool Solution::operator==(const Solution& other) const {
  return placements == other.placements && route_choice == other.route_choice &&
         routes == other.routes && qaoa_params == other.qaoa_params &&
         active_inputs == other.active_inputs &&
         measurement == other.measurement;
}

Solution seed_solution(const CircuitSpec& spec, int depth) {
  Solution s;
  for (const auto& inst : materialize_instances(spec)) {
    const auto& g = spec.gates[inst.gate];
    Placement p;
    p.pos = g.initial_pos.value_or(GridPos{0, 0});
    p.rotation = g.initial_rotation;
    p.layer = g.rounds[inst.ordinal];
    s.placements.push_back(p);
  }
  s.route_choice.assign(spec.nets.size(), 0);
  s.routes_stale = true;
  const int n = spec.problem.vertices;
  const int m = static_cast<int>(spec.problem.edges.size());
  s.qaoa_params.mixer.assign(depth, std::vector<double>(n, 0.0));
  s.qaoa_params.phase.assign(depth, std::vector<double>(m, 0.0));
  s.active_inputs = spec.num_inputs;
  s.measurement = spec.measurement;
  return s;
}

Solution random_solution(const CircuitSpec& spec, int depth,
                         RandomSource& rng) {
  Solution s = seed_solution(spec, depth);
  const auto instances = materialize_instances(spec);

  // Drop instances one at a time, each only avoiding the ones already down.
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& g = spec.gates[instances[i].gate];
    bool placed = false;
    for (int attempt = 0; attempt < 256 && !placed; ++attempt) {
      Placement p;
      p.rotation = static_cast<Rotation>(rng.uniform_int(4));
      p.layer = g.rounds[instances[i].ordinal];
      const auto [fw, fh] = footprint(g, p.rotation);
      if (fw > spec.grid_width || fh > spec.grid_height) continue;
      p.pos.x = rng.uniform_int(spec.grid_width - fw + 1);
      p.pos.y = rng.uniform_int(spec.grid_height - fh + 1);

      bool ok = p.layer >= 1 && p.layer <= spec.num_layers;
      for (const auto& blk : spec.blockages) {
        if (!ok || blk.layer != p.layer) continue;
        for (const auto& c : blk.cells)
          if (cell_in_rect(c, p.pos, fw, fh)) {
            ok = false;
            break;
          }
      }
      for (std::size_t j = 0; ok && j < i; ++j) {
        const auto& q = s.placements[j];
        if (q.layer != p.layer) continue;
        const auto [ow, oh] =
            footprint(spec.gates[instances[j].gate], q.rotation);
        if (rects_intersect(p.pos, fw, fh, q.pos, ow, oh)) ok = false;
      }
      if (ok) {
        s.placements[i] = p;
        placed = true;
      }
    }
    if (!placed)
      throw ConfigError("cannot find a free position for gate " + g.id);
  }

  for (auto& row : s.qaoa_params.mixer)
    for (auto& a : row) a = rng.uniform(0.0, std::numbers::pi);
  for (auto& row : s.qaoa_params.phase)
    for (auto& a : row) a = rng.uniform(0.0, std::numbers::pi);
  s.routes_stale = true;
  return s;
}

GridVertex port_vertex(const CircuitSpec& spec, const Solution& s,
                       const NetPort& port) {
  const int idx = instance_index(spec, port.gate, port.instance);
  const auto& p = s.placements[idx];
  const auto off = port_offset(spec.gates[port.gate], port.port, p.rotation);
  return {p.pos.x + off.x, p.pos.y + off.y, p.layer};
}

// ---------------------------------------------------------------------------
// Validation

namespace {

void check_port(const CircuitSpec& spec, const NetPort& np,
                const std::string& where, std::vector<std::string>& out) {
  if (np.gate < 0 || np.gate >= static_cast<int>(spec.gates.size())) {
    out.push_back(where + ": gate index out of range");
    return;
  }
  const auto& g = spec.gates[np.gate];
  if (np.instance < 0 || np.instance >= static_cast<int>(g.rounds.size()))
    out.push_back(where + ": instance ordinal out of range for gate " + g.id);
  if (np.port < 0 || np.port >= g.num_ports)
    out.push_back(where + ": port index out of range for gate " + g.id);
  if (!(np.amplitude > 0.0))
    out.push_back(where + ": amplitude must be positive");
}

}  // namespace

std::vector<std::string> validate(const CircuitSpec& spec) {
  std::vector<std::string> out;
  if (spec.format != 1) out.push_back("unsupported format (expected 1)");
  if (spec.num_layers < 1) out.push_back("num_layers must be >= 1");
  if (spec.grid_width < 1 || spec.grid_height < 1)
    out.push_back("grid must be at least 1x1");
  if (spec.num_inputs < 1) out.push_back("n must be >= 1");
  if (spec.basis_dim < 2) out.push_back("d must be >= 2");

  if (spec.problem.vertices < 1)
    out.push_back("problem graph needs at least one vertex");
  if (spec.problem.edges.empty())
    out.push_back("problem graph needs at least one edge");
  for (const auto& [a, b] : spec.problem.edges) {
    if (a == b) out.push_back("problem graph has a self-loop");
    if (a < 0 || b < 0 || a >= spec.problem.vertices ||
        b >= spec.problem.vertices)
      out.push_back("problem edge endpoint out of range");
  }

  std::set<std::string> gate_ids;
  for (const auto& g : spec.gates) {
    const std::string where = "gate " + g.id;
    if (g.id.empty()) out.push_back("gate with empty id");
    if (!gate_ids.insert(g.id).second)
      out.push_back("duplicate gate id " + g.id);
    if (g.num_ports < 1) out.push_back(where + ": ports must be >= 1");
    if (g.width < 1 || g.height < 1)
      out.push_back(where + ": footprint must be at least 1x1");
    if (g.width > spec.grid_width || g.height > spec.grid_height) {
      // Rotation may still let it fit.
      if (g.height > spec.grid_width || g.width > spec.grid_height)
        out.push_back(where + ": footprint exceeds the grid");
    }
    if (g.rounds.empty()) out.push_back(where + ": no application rounds");
    std::set<int> seen;
    for (int r : g.rounds) {
      if (r < 1 || r > spec.num_layers)
        out.push_back(where + ": round outside [1, num_layers]");
      if (!seen.insert(r).second)
        out.push_back(where + ": applied twice on one layer");
    }
    if (g.symmetry.kind == SymmetryClass::PairMember) {
      const int p = spec.gate_index(g.symmetry.partner);
      if (p < 0) {
        out.push_back(where + ": symmetry partner not found");
      } else {
        const auto& pg = spec.gates[p];
        if (pg.id == g.id) out.push_back(where + ": gate paired with itself");
        if (pg.symmetry.kind != SymmetryClass::PairMember ||
            pg.symmetry.partner != g.id)
          out.push_back(where + ": symmetry pairing is not mutual");
        if (pg.width != g.width || pg.height != g.height)
          out.push_back(where + ": paired gates must share a footprint");
      }
    }
  }

  std::set<std::string> net_ids;
  for (const auto& net : spec.nets) {
    const std::string where = "net " + net.id;
    if (!net_ids.insert(net.id).second)
      out.push_back("duplicate net id " + net.id);
    if (net.sources.empty()) out.push_back(where + ": no sources");
    if (net.sinks.empty()) out.push_back(where + ": no sinks");
    for (const auto& p : net.sources) check_port(spec, p, where, out);
    for (const auto& p : net.sinks) check_port(spec, p, where, out);
    if (!net.subnets.empty()) {
      const int total =
          static_cast<int>(net.sources.size() + net.sinks.size());
      std::set<int> covered;
      for (const auto& group : net.subnets)
        for (int i : group) {
          if (i < 0 || i >= total)
            out.push_back(where + ": subnet member out of range");
          else if (!covered.insert(i).second)
            out.push_back(where + ": subnet groups overlap");
        }
      if (static_cast<int>(covered.size()) != total)
        out.push_back(where + ": subnets must cover every port");
    }
    if (net.problem_edge) {
      const auto [a, b] = *net.problem_edge;
      const bool known = std::any_of(
          spec.problem.edges.begin(), spec.problem.edges.end(),
          [&](const auto& e) {
            return (e.first == a && e.second == b) ||
                   (e.first == b && e.second == a);
          });
      if (!known)
        out.push_back(where + ": associated edge is not in the problem graph");
    }
  }

  for (const auto& blk : spec.blockages) {
    if (blk.layer < 1 || blk.layer > spec.num_layers)
      out.push_back("blockage layer outside [1, num_layers]");
    for (const auto& c : blk.cells)
      if (c.x < 0 || c.y < 0 || c.x >= spec.grid_width ||
          c.y >= spec.grid_height)
        out.push_back("blockage cell outside the grid");
  }

  if (spec.reference_distribution) {
    const auto& ref = *spec.reference_distribution;
    std::size_t want = 1;
    for (int i = 0; i < spec.problem.vertices; ++i) want *= 2;
    if (ref.size() != want)
      out.push_back("reference distribution length must be 2^n");
    double sum = 0.0;
    for (double p : ref) {
      if (p < 0.0) out.push_back("reference distribution has a negative entry");
      sum += p;
    }
    if (std::abs(sum - 1.0) > 1e-9)
      out.push_back("reference distribution does not sum to 1");
  }

  if (spec.reference_circuit) {
    const auto& rc = *spec.reference_circuit;
    if (rc.problem.vertices < 1 || rc.problem.edges.empty())
      out.push_back("reference circuit problem graph is degenerate");
    if (rc.params.mixer.size() != rc.params.phase.size())
      out.push_back("reference circuit parameter stacks differ in depth");
    for (const auto& row : rc.params.mixer)
      if (row.size() != static_cast<std::size_t>(rc.problem.vertices))
        out.push_back("reference circuit mixer row has wrong arity");
    for (const auto& row : rc.params.phase)
      if (row.size() != rc.problem.edges.size())
        out.push_back("reference circuit phase row has wrong arity");
  }

  if (spec.measurement.rounds < 1)
    out.push_back("measurement rounds must be >= 1");
  if (spec.measurement.gates < 0)
    out.push_back("measured gate count must be >= 0");

  return out;
}

std::vector<std::string> validate(const CircuitSpec& spec, const Solution& s) {
  std::vector<std::string> out;
  const auto instances = materialize_instances(spec);
  if (s.placements.size() != instances.size()) {
    out.push_back("placement count does not match the instance list");
    return out;
  }
  if (s.route_choice.size() != spec.nets.size())
    out.push_back("route choice count does not match the net list");
  if (!s.routes_stale && s.routes.size() != spec.nets.size())
    out.push_back("route count does not match the net list");

  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& g = spec.gates[instances[i].gate];
    const auto& p = s.placements[i];
    const auto [fw, fh] = footprint(g, p.rotation);
    const std::string where = "instance " + std::to_string(i) + " (" + g.id + ")";
    if (p.layer < 1 || p.layer > spec.num_layers)
      out.push_back(where + ": layer outside [1, num_layers]");
    if (p.pos.x < 0 || p.pos.y < 0 || p.pos.x + fw > spec.grid_width ||
        p.pos.y + fh > spec.grid_height)
      out.push_back(where + ": footprint leaves the grid");
    for (const auto& blk : spec.blockages) {
      if (blk.layer != p.layer) continue;
      for (const auto& c : blk.cells)
        if (cell_in_rect(c, p.pos, fw, fh)) {
          out.push_back(where + ": overlaps a blockage");
          break;
        }
    }
    for (std::size_t j = i + 1; j < instances.size(); ++j) {
      const auto& q = s.placements[j];
      if (q.layer != p.layer) continue;
      if (instances[j].gate == instances[i].gate)
        out.push_back("gate " + g.id + ": two applications on one layer");
      const auto& og = spec.gates[instances[j].gate];
      const auto [ow, oh] = footprint(og, q.rotation);
      if (rects_intersect(p.pos, fw, fh, q.pos, ow, oh))
        out.push_back(where + ": overlaps instance " + std::to_string(j));
    }
  }

  const auto& pc = s.qaoa_params;
  if (pc.mixer.size() != pc.phase.size())
    out.push_back("parameter stacks differ in depth");
  for (const auto& row : pc.mixer) {
    if (row.size() != static_cast<std::size_t>(spec.problem.vertices))
      out.push_back("mixer angle row has wrong arity");
    for (double a : row)
      if (a < 0.0 || a > std::numbers::pi)
        out.push_back("mixer angle outside [0, pi]");
  }
  for (const auto& row : pc.phase) {
    if (row.size() != spec.problem.edges.size())
      out.push_back("phase angle row has wrong arity");
    for (double a : row)
      if (a < 0.0 || a > std::numbers::pi)
        out.push_back("phase angle outside [0, pi]");
  }

  if (s.active_inputs < 1) out.push_back("active input count must be >= 1");
  if (s.measurement.rounds < 1)
    out.push_back("measurement rounds must be >= 1");
  if (s.measurement.gates < 0)
    out.push_back("measured gate count must be >= 0");
  for (int c : s.route_choice)
    if (c < 0) out.push_back("route choice must be non-negative");

  return out;
}

// ---------------------------------------------------------------------------
// Moves

namespace {

std::optional<Solution> apply_relocate(const CircuitSpec& spec,
                                       const std::vector<GateInstance>& inst,
                                       const Solution& s,
                                       const RelocateMove& m) {
  if (m.instance < 0 || m.instance >= static_cast<int>(inst.size()))
    return std::nullopt;
  const auto& g = spec.gates[inst[m.instance].gate];
  Placement p = s.placements[m.instance];
  if (p.pos == m.to) return std::nullopt;
  p.pos = m.to;
  if (!placement_fits(spec, inst, s, g, p, m.instance, -1))
    return std::nullopt;
  Solution out = s;
  out.placements[m.instance] = p;
  out.routes_stale = true;
  return out;
}

std::optional<Solution> apply_layer(const CircuitSpec& spec,
                                    const std::vector<GateInstance>& inst,
                                    const Solution& s, const LayerMove& m) {
  if (m.instance < 0 || m.instance >= static_cast<int>(inst.size()))
    return std::nullopt;
  if (m.to_layer < 1 || m.to_layer > spec.num_layers) return std::nullopt;
  Placement p = s.placements[m.instance];
  if (p.layer == m.to_layer) return std::nullopt;
  // One application per layer: no sibling instance may hold the target layer.
  for (std::size_t j = 0; j < inst.size(); ++j)
    if (static_cast<int>(j) != m.instance &&
        inst[j].gate == inst[m.instance].gate &&
        s.placements[j].layer == m.to_layer)
      return std::nullopt;
  p.layer = m.to_layer;
  const auto& g = spec.gates[inst[m.instance].gate];
  if (!placement_fits(spec, inst, s, g, p, m.instance, -1))
    return std::nullopt;
  Solution out = s;
  out.placements[m.instance] = p;
  out.routes_stale = true;
  return out;
}

std::optional<Solution> apply_rotate(const CircuitSpec& spec,
                                     const std::vector<GateInstance>& inst,
                                     const Solution& s, const RotateMove& m) {
  if (m.instance < 0 || m.instance >= static_cast<int>(inst.size()))
    return std::nullopt;
  Placement p = s.placements[m.instance];
  if (p.rotation == m.to) return std::nullopt;
  p.rotation = m.to;
  const auto& g = spec.gates[inst[m.instance].gate];
  if (!placement_fits(spec, inst, s, g, p, m.instance, -1))
    return std::nullopt;
  Solution out = s;
  out.placements[m.instance] = p;
  out.routes_stale = true;
  return out;
}

std::optional<Solution> apply_symmetry(const CircuitSpec& spec,
                                       const std::vector<GateInstance>& inst,
                                       const Solution& s,
                                       const SymmetryPairMove& m) {
  if (m.gate < 0 || m.gate >= static_cast<int>(spec.gates.size()))
    return std::nullopt;
  const auto& g = spec.gates[m.gate];
  if (m.ordinal < 0 || m.ordinal >= static_cast<int>(g.rounds.size()))
    return std::nullopt;
  const double axis = spec.axis();

  if (g.symmetry.kind == SymmetryClass::SelfSymmetric) {
    const int idx = instance_index(spec, m.gate, m.ordinal);
    Placement p = s.placements[idx];
    const auto [fw, fh] = footprint(g, p.rotation);
    (void)fh;
    p.pos = {static_cast<int>(std::lround(axis - fw / 2.0)), m.y};
    if (p.pos == s.placements[idx].pos) return std::nullopt;
    if (!placement_fits(spec, inst, s, g, p, idx, -1)) return std::nullopt;
    Solution out = s;
    out.placements[idx] = p;
    out.routes_stale = true;
    return out;
  }

  if (g.symmetry.kind != SymmetryClass::PairMember) return std::nullopt;
  const int pg = spec.gate_index(g.symmetry.partner);
  if (pg < 0 || m.ordinal >= static_cast<int>(spec.gates[pg].rounds.size()))
    return std::nullopt;
  const int ia = instance_index(spec, m.gate, m.ordinal);
  const int ib = instance_index(spec, pg, m.ordinal);

  Placement pa = s.placements[ia];
  Placement pb = s.placements[ib];
  // Mirror with matching orientation; the residual is measured on the
  // rotated footprint width.
  pb.rotation = pa.rotation;
  const auto [fw, fh] = footprint(g, pa.rotation);
  (void)fh;
  pa.pos = {m.x1, m.y};
  pb.pos = {static_cast<int>(std::lround(2.0 * axis)) - fw - m.x1, m.y};
  if (pa.pos == s.placements[ia].pos && pb.pos == s.placements[ib].pos &&
      pb.rotation == s.placements[ib].rotation)
    return std::nullopt;
  if (!placement_fits(spec, inst, s, g, pa, ia, ib)) return std::nullopt;
  if (!placement_fits(spec, inst, s, spec.gates[pg], pb, ia, ib))
    return std::nullopt;
  const auto [aw, ah] = footprint(g, pa.rotation);
  const auto [bw, bh] = footprint(spec.gates[pg], pb.rotation);
  if (rects_intersect(pa.pos, aw, ah, pb.pos, bw, bh) &&
      pa.layer == pb.layer)
    return std::nullopt;
  Solution out = s;
  out.placements[ia] = pa;
  out.placements[ib] = pb;
  out.routes_stale = true;
  return out;
}

std::optional<Solution> apply_separation(const CircuitSpec& spec,
                                         const Solution& s,
                                         const SeparationMove& m) {
  if (m.net < 0 || m.net >= static_cast<int>(spec.nets.size()))
    return std::nullopt;
  const auto& net = spec.nets[m.net];
  if (net.sources.size() + net.sinks.size() < 3) return std::nullopt;
  if (m.choice < 0 || m.choice >= 64) return std::nullopt;
  if (s.route_choice[m.net] == m.choice) return std::nullopt;
  Solution out = s;
  out.route_choice[m.net] = m.choice;
  out.routes_stale = true;
  return out;
}

std::optional<Solution> apply_angle(const Solution& s, const AngleMove& m) {
  const auto& pc = s.qaoa_params;
  if (m.collection < 0 || m.collection >= pc.depth()) return std::nullopt;
  const auto& row =
      m.phase ? pc.phase[m.collection] : pc.mixer[m.collection];
  if (m.index < 0 || m.index >= static_cast<int>(row.size()))
    return std::nullopt;
  Solution out = s;
  auto& target = m.phase ? out.qaoa_params.phase[m.collection][m.index]
                         : out.qaoa_params.mixer[m.collection][m.index];
  target = std::clamp(target + m.delta, 0.0, std::numbers::pi);
  // Angles do not touch the layout, so routes stay valid.
  return out;
}

}  // namespace

std::optional<Solution> solution_clone_with_move(const CircuitSpec& spec,
                                                 const Solution& s,
                                                 const MoveDescriptor& move) {
  const auto instances = materialize_instances(spec);
  return std::visit(
      [&](const auto& m) -> std::optional<Solution> {
        using T = std::decay_t<decltype(m)>;
        if constexpr (std::is_same_v<T, RelocateMove>)
          return apply_relocate(spec, instances, s, m);
        else if constexpr (std::is_same_v<T, LayerMove>)
          return apply_layer(spec, instances, s, m);
        else if constexpr (std::is_same_v<T, RotateMove>)
          return apply_rotate(spec, instances, s, m);
        else if constexpr (std::is_same_v<T, SymmetryPairMove>)
          return apply_symmetry(spec, instances, s, m);
        else if constexpr (std::is_same_v<T, SeparationMove>)
          return apply_separation(spec, s, m);
        else
          return apply_angle(s, m);
      },
      move);
}

}  // namespace qtam
