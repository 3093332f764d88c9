#pragma once

#include <span>
#include <vector>

#include "qtam/circuit.hpp"

namespace qtam {

/// Physical constants of the target device used to turn amplitudes into
/// wire widths.
struct DeviceConstants {
  double j_max = 1.0;    ///< current-density ceiling per unit height
  double h_nom = 1.0;    ///< nominal wiring-layer height
  double r_0 = 1.0;      ///< resistance scale per unit length
  double chi = 1.0;      ///< tolerated phase drop along one wire
  double delta_0 = 0.1;  ///< minimum manufacturable width
};

/// Current-density width: |psi| / (j_max * h_nom).
double effective_width(double psi, const DeviceConstants& dev);

/// Phase-budget width: |psi| * length * r_0 / chi. At the longest run the
/// phase budget allows, this pins exactly the current-density width.
double phase_limited_width(double psi, double length,
                           const DeviceConstants& dev);

/// One wire between two ports of a net. `psi` is the amplitude carried from
/// src to dst; `headroom` the amplitude the wire could still take before
/// saturating its share of supply and demand.
struct WireState {
  int src = 0;  ///< port index within the net (sources first, then sinks)
  int dst = 0;
  double length = 0.0;
  double psi = 0.0;
  double headroom = 0.0;
  double width = 0.0;
  bool augmentation = false;  ///< added only to restore connectivity
  bool operator==(const WireState&) const = default;
};

/// Ports of one net: positions, signed supplies (sources positive, sinks
/// negative) and subnet labels. Ports sharing a label are internally
/// connected for free.
struct NetPorts {
  std::vector<GridVertex> position;
  std::vector<double> supply;
  std::vector<int> subnet;
};

NetPorts net_ports(const CircuitSpec& spec, const Solution& s, const Net& net);

/// Amplitude-conserving assignment of source supplies onto source-sink
/// wires, minimal in total area. Throws ConfigError when supply and demand
/// differ. The result keeps zero-amplitude candidate wires so later passes
/// know the full geometry.
std::vector<WireState> assign_amplitudes(const NetPorts& ports,
                                         const DeviceConstants& dev,
                                         double via_cost);

/// One arc of the residual bookkeeping. Forward arcs can absorb more
/// amplitude; backward arcs (present only where amplitude flows) can return
/// it. `phi`, `xi`, `xi_bar` and `neg_length` keep the per-arc committed /
/// injectable / returnable amplitudes and the negated wire length; `residual`
/// and `unit_cost` drive the cycle canceling.
struct ResidualArc {
  int from = 0;
  int to = 0;
  bool backward = false;
  double phi = 0.0;
  double xi = 0.0;
  double xi_bar = 0.0;
  double neg_length = 0.0;
  double residual = 0.0;
  double unit_cost = 0.0;
  int wire = -1;
};

struct ResidualNetwork {
  int node_count = 0;
  std::vector<ResidualArc> arcs;
};

ResidualNetwork build_residual(const NetPorts& ports,
                               std::span<const WireState> wires,
                               const DeviceConstants& dev);

/// Cancel negative-cost residual cycles until the assignment is area
/// minimal. Throws RefinementError if the cap of 10 * |wires|^2 rounds is
/// hit first.
std::vector<WireState> cancel_negative_cycles(const NetPorts& ports,
                                              std::vector<WireState> wires,
                                              const DeviceConstants& dev);

/// Add minimum-width bidirectional wires (a spanning tree over subnets,
/// shortest pairs first) until every port can reach every other.
std::vector<WireState> ensure_strong_connectivity(const NetPorts& ports,
                                                  std::vector<WireState> wires,
                                                  const DeviceConstants& dev,
                                                  double via_cost);

struct RefinedNet {
  std::vector<WireState> wires;  ///< carrying wires plus augmentations
  double flow_area = 0.0;        ///< sum length * width over carrying wires
  double amplitude_area = 0.0;   ///< sum length * |psi| (simplified form)
};

struct RefinedWiring {
  std::vector<RefinedNet> nets;
  double total_area = 0.0;  ///< summed flow areas; the wire-area objective
};

/// Full refinement over every net: assignment, cycle canceling and
/// connectivity restoration.
RefinedWiring method2_pipeline(const CircuitSpec& spec, const Solution& s,
                               const DeviceConstants& dev, double via_cost);

}  // namespace qtam
