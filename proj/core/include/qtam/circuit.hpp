#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace qtam {

// ---------------------------------------------------------------------------
// Geometry

struct GridPos {
  int x = 0;
  int y = 0;
  auto operator<=>(const GridPos&) const = default;
};

/// One cell of the multilayer grid. Layers are 1-based: z in [1, r].
struct GridVertex {
  int x = 0;
  int y = 0;
  int layer = 1;
  auto operator<=>(const GridVertex&) const = default;
};

enum class Rotation : std::uint8_t { R0 = 0, R90 = 1, R180 = 2, R270 = 3 };

// ---------------------------------------------------------------------------
// Circuit description (immutable after load)

enum class SymmetryClass : std::uint8_t { Free, PairMember, SelfSymmetric };

struct Symmetry {
  SymmetryClass kind = SymmetryClass::Free;
  std::string partner;  ///< other gate id; PairMember only
  bool operator==(const Symmetry&) const = default;
};

struct GateSpec {
  std::string id;
  int num_ports = 1;
  int width = 1;   ///< footprint width in grid units, unrotated
  int height = 1;  ///< footprint height in grid units, unrotated
  Symmetry symmetry;
  /// Layers on which the gate is applied. Each entry materializes one
  /// independent instance; an instance may later be moved to another layer.
  std::vector<int> rounds{1};
  std::optional<GridPos> initial_pos;
  Rotation initial_rotation = Rotation::R0;
};

/// A terminal of a net: a specific port of a specific gate instance.
struct NetPort {
  int gate = 0;
  int instance = 0;  ///< ordinal into the gate's rounds
  int port = 0;
  double amplitude = 1.0;  ///< |psi| injected (source) or absorbed (sink)
  auto operator<=>(const NetPort&) const = default;
};

struct Net {
  std::string id;
  std::vector<NetPort> sources;
  std::vector<NetPort> sinks;
  /// Partition of port indices into subnets; ports are numbered source-major
  /// (0..s-1 sources, then sinks). Empty partition = every port alone.
  std::vector<std::vector<int>> subnets;
  /// Problem-graph edge whose interaction this net carries, if any.
  std::optional<std::pair<int, int>> problem_edge;
};

struct Blockage {
  int layer = 1;
  std::vector<GridPos> cells;
};

struct ProblemGraph {
  int vertices = 0;
  std::vector<std::pair<int, int>> edges;
};

struct MeasurementPlan {
  int rounds = 1;  ///< measurement rounds
  int gates = 0;   ///< gates measured per round
  auto operator<=>(const MeasurementPlan&) const = default;
};

/// Angle collections for the alternating-operator ansatz. Depth-u stacks of
/// per-system mixer angles and per-edge phase angles, each within [0, pi].
struct ParameterCollections {
  std::vector<std::vector<double>> mixer;  ///< u rows of n angles
  std::vector<std::vector<double>> phase;  ///< u rows of one angle per edge
  int depth() const { return static_cast<int>(mixer.size()); }
  bool operator==(const ParameterCollections&) const = default;
};

struct ReferenceCircuit {
  ProblemGraph problem;
  ParameterCollections params;
};

struct CircuitSpec {
  int format = 1;
  int num_layers = 1;  ///< r
  int grid_width = 1;
  int grid_height = 1;
  int num_inputs = 1;  ///< n, quantum systems feeding the circuit
  int basis_dim = 2;   ///< d; the engine only evolves d = 2
  std::vector<GateSpec> gates;
  std::vector<Net> nets;
  std::vector<Blockage> blockages;
  ProblemGraph problem;
  /// Target output distribution for the closeness constraint. When absent, a
  /// reference circuit (if given) supplies it; otherwise closeness is 0.
  std::optional<std::vector<double>> reference_distribution;
  std::optional<ReferenceCircuit> reference_circuit;
  std::optional<double> symmetry_axis;  ///< x of the vertical mirror line
  MeasurementPlan measurement{1, 0};

  double axis() const {
    return symmetry_axis ? *symmetry_axis : grid_width / 2.0;
  }
  /// Index of a gate by id, or -1.
  int gate_index(const std::string& id) const;
};

// ---------------------------------------------------------------------------
// Gate instances. Placement, routing and the objectives all operate on the
// flat instance list: one entry per (gate, round), gate-major order.

struct GateInstance {
  int gate = 0;
  int ordinal = 0;
  auto operator<=>(const GateInstance&) const = default;
};

std::vector<GateInstance> materialize_instances(const CircuitSpec& spec);

/// Flat index of (gate, ordinal) in the materialized instance list.
int instance_index(const CircuitSpec& spec, int gate, int ordinal);

struct Placement {
  GridPos pos;  ///< bottom-left cell of the rotated footprint
  Rotation rotation = Rotation::R0;
  int layer = 1;
  auto operator<=>(const Placement&) const = default;
};

/// Footprint (width, height) of a gate under a rotation.
std::pair<int, int> footprint(const GateSpec& gate, Rotation r);

/// Offset of a port within the rotated footprint. Ports are laid out on the
/// unrotated perimeter clockwise from the bottom-left cell and follow the
/// gate when it rotates.
GridPos port_offset(const GateSpec& gate, int port, Rotation r);

/// Cells covered by one placed instance.
std::vector<GridPos> covered_cells(const GateSpec& gate, const Placement& p);

// ---------------------------------------------------------------------------
// Routes. Produced by the router; stored on the solution as plain data so
// that equality and cloning stay structural.

struct RouteResult {
  std::vector<std::vector<GridVertex>> segments;  ///< per routed leg
  double cost = 0.0;     ///< summed edge costs of all segments
  double overlap = 0.0;  ///< cost of the shared source->separation prefix
  std::optional<GridVertex> separation;
  bool unreachable = false;
  bool operator==(const RouteResult&) const = default;
};

// ---------------------------------------------------------------------------
// Solution: one state of the annealer

struct Solution {
  std::vector<Placement> placements;  ///< aligned with materialize_instances
  std::vector<int> route_choice;      ///< per net: rank among candidate separation points
  std::vector<RouteResult> routes;    ///< per net; meaningful when !routes_stale
  bool routes_stale = true;
  ParameterCollections qaoa_params;
  int active_inputs = 1;
  MeasurementPlan measurement;

  /// Structural equality over everything that defines the state. The
  /// staleness flag is bookkeeping and does not participate.
  bool operator==(const Solution& other) const;
};

/// Starting state: spec-provided placements where present (origin otherwise),
/// all angles 0 at the given depth, routes stale.
Solution seed_solution(const CircuitSpec& spec, int depth);

class RandomSource;

/// Random layout-valid state: instances dropped one by one onto free
/// positions (bounded retries each), angles uniform in [0, pi]. Throws
/// ConfigError when an instance cannot be placed.
Solution random_solution(const CircuitSpec& spec, int depth,
                         RandomSource& rng);

/// Grid cell of a net terminal under the given solution.
GridVertex port_vertex(const CircuitSpec& spec, const Solution& s,
                       const NetPort& port);

// ---------------------------------------------------------------------------
// Validation. Returns human-readable problems; empty means valid.

std::vector<std::string> validate(const CircuitSpec& spec);
std::vector<std::string> validate(const CircuitSpec& spec, const Solution& s);

// ---------------------------------------------------------------------------
// Moves. Each move clones the solution; nullopt means the move cannot be
// applied (target occupied, blocked or out of bounds) and the caller should
// draw a different move. Applied moves always yield a layout-valid clone.

struct RelocateMove {  ///< slide one instance within its layer
  int instance = 0;
  GridPos to;
};
struct LayerMove {  ///< reassign one instance to a different layer
  int instance = 0;
  int to_layer = 1;
};
struct RotateMove {
  int instance = 0;
  Rotation to = Rotation::R0;
};
/// Coordinated placement of a symmetry pair (or recentering of a
/// self-symmetric gate) so the mirror-line residual returns to zero.
struct SymmetryPairMove {
  int gate = 0;  ///< pair anchor (or the self-symmetric gate)
  int ordinal = 0;
  int x1 = 0;  ///< anchor x; the partner mirrors about the axis
  int y = 0;
};
struct SeparationMove {  ///< pick another ranked separation candidate
  int net = 0;
  int choice = 0;
};
struct AngleMove {  ///< perturb one angle, clipped to [0, pi]
  int collection = 0;
  bool phase = false;  ///< false: mixer angle
  int index = 0;
  double delta = 0.0;
};

using MoveDescriptor = std::variant<RelocateMove, LayerMove, RotateMove,
                                    SymmetryPairMove, SeparationMove,
                                    AngleMove>;

std::optional<Solution> solution_clone_with_move(const CircuitSpec& spec,
                                                 const Solution& s,
                                                 const MoveDescriptor& move);

// ---------------------------------------------------------------------------
// Document I/O (format: 1)

CircuitSpec parse_circuit(const std::string& json_text);
CircuitSpec load_circuit(const std::string& path);
std::string circuit_to_json(const CircuitSpec& spec);

}  // namespace qtam
