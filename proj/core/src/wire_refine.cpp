#include "qtam/wire_refine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "qtam/errors.hpp"
#include "qtam/objectives.hpp"

namespace qtam {

namespace {

constexpr double kAmpEps = 1e-12;

void check_device(const DeviceConstants& dev) {
  if (dev.j_max <= 0.0 || dev.h_nom <= 0.0 || dev.r_0 <= 0.0 ||
      dev.chi <= 0.0 || dev.delta_0 < 0.0)
    throw std::invalid_argument("device constants must be positive");
}

}  // namespace

double effective_width(double psi, const DeviceConstants& dev) {
  check_device(dev);
  return std::abs(psi) / (dev.j_max * dev.h_nom);
}

double phase_limited_width(double psi, double length,
                           const DeviceConstants& dev) {
  check_device(dev);
  if (length < 0.0) throw std::invalid_argument("length must be >= 0");
  return std::abs(psi) * length * dev.r_0 / dev.chi;
}

NetPorts net_ports(const CircuitSpec& spec, const Solution& s,
                   const Net& net) {
  NetPorts out;
  for (const auto& p : net.sources) {
    out.position.push_back(port_vertex(spec, s, p));
    out.supply.push_back(p.amplitude);
  }
  for (const auto& p : net.sinks) {
    out.position.push_back(port_vertex(spec, s, p));
    out.supply.push_back(-p.amplitude);
  }
  const int total = static_cast<int>(out.position.size());
  out.subnet.assign(static_cast<std::size_t>(total), 0);
  if (net.subnets.empty()) {
    std::iota(out.subnet.begin(), out.subnet.end(), 0);
  } else {
    for (std::size_t grp = 0; grp < net.subnets.size(); ++grp)
      for (int member : net.subnets[grp]) {
        if (member < 0 || member >= total)
          throw ConfigError("net " + net.id + ": subnet member out of range");
        out.subnet[static_cast<std::size_t>(member)] = static_cast<int>(grp);
      }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Assignment

std::vector<WireState> assign_amplitudes(const NetPorts& ports,
                                         const DeviceConstants& dev,
                                         double via_cost) {
  check_device(dev);
  std::vector<int> sources;
  std::vector<int> sinks;
  double supply_total = 0.0;
  double demand_total = 0.0;
  for (std::size_t i = 0; i < ports.supply.size(); ++i) {
    if (ports.supply[i] > 0.0) {
      sources.push_back(static_cast<int>(i));
      supply_total += ports.supply[i];
    } else if (ports.supply[i] < 0.0) {
      sinks.push_back(static_cast<int>(i));
      demand_total -= ports.supply[i];
    }
  }
  if (std::abs(supply_total - demand_total) > 1e-9)
    throw ConfigError("net amplitudes are unbalanced: supply " +
                      std::to_string(supply_total) + " vs demand " +
                      std::to_string(demand_total));

  // Full candidate matrix. Zero-amplitude wires stay in the list so the
  // canceling pass can move amplitude onto them.
  std::vector<WireState> wires;
  for (int i : sources)
    for (int j : sinks) {
      WireState w;
      w.src = i;
      w.dst = j;
      w.length = wire_length(ports.position[static_cast<std::size_t>(i)],
                             ports.position[static_cast<std::size_t>(j)],
                             via_cost);
      w.headroom = std::min(ports.supply[static_cast<std::size_t>(i)],
                            -ports.supply[static_cast<std::size_t>(j)]);
      wires.push_back(w);
    }

  // Feasible start: walk the sources and sinks in order, committing as much
  // as either side still allows.
  std::vector<double> remaining_supply;
  std::vector<double> remaining_demand;
  for (int i : sources)
    remaining_supply.push_back(ports.supply[static_cast<std::size_t>(i)]);
  for (int j : sinks)
    remaining_demand.push_back(-ports.supply[static_cast<std::size_t>(j)]);

  std::size_t si = 0;
  std::size_t sj = 0;
  while (si < sources.size() && sj < sinks.size()) {
    const double amount = std::min(remaining_supply[si], remaining_demand[sj]);
    if (amount > 0.0) {
      auto& w = wires[si * sinks.size() + sj];
      w.psi += amount;
      w.headroom -= amount;
      remaining_supply[si] -= amount;
      remaining_demand[sj] -= amount;
    }
    if (remaining_supply[si] <= kAmpEps)
      ++si;
    else
      ++sj;
  }

  wires = cancel_negative_cycles(ports, std::move(wires), dev);
  for (auto& w : wires) w.width = effective_width(w.psi, dev);
  return wires;
}

// ---------------------------------------------------------------------------
// Residual bookkeeping

ResidualNetwork build_residual(const NetPorts& ports,
                               std::span<const WireState> wires,
                               const DeviceConstants& dev) {
  check_device(dev);
  const double unit = 1.0 / (dev.j_max * dev.h_nom);
  ResidualNetwork rn;
  rn.node_count = static_cast<int>(ports.position.size());
  for (std::size_t w = 0; w < wires.size(); ++w) {
    const auto& ws = wires[w];
    if (ws.augmentation) continue;
    ResidualArc fwd;
    fwd.from = ws.src;
    fwd.to = ws.dst;
    fwd.backward = false;
    fwd.phi = std::min(std::abs(ws.psi), std::abs(ws.headroom));
    fwd.xi = fwd.phi - ws.psi;
    fwd.xi_bar = 0.0;
    fwd.neg_length = -ws.length;
    fwd.residual = ws.headroom;
    fwd.unit_cost = ws.length * unit;
    fwd.wire = static_cast<int>(w);
    rn.arcs.push_back(fwd);
    if (ws.psi > kAmpEps) {
      ResidualArc bwd;
      bwd.from = ws.dst;
      bwd.to = ws.src;
      bwd.backward = true;
      bwd.phi = fwd.phi;
      bwd.xi = 0.0;
      bwd.xi_bar = -ws.psi;
      bwd.neg_length = -ws.length;
      bwd.residual = ws.psi;
      bwd.unit_cost = -ws.length * unit;
      bwd.wire = static_cast<int>(w);
      rn.arcs.push_back(bwd);
    }
  }
  return rn;
}

// ---------------------------------------------------------------------------
// Cycle canceling

namespace {

/// One negative-cost cycle in the residual network, as arc indices, or empty.
std::vector<int> find_negative_cycle(const ResidualNetwork& rn) {
  const int n = rn.node_count;
  if (n == 0) return {};
  std::vector<double> dist(static_cast<std::size_t>(n), 0.0);
  std::vector<int> parent_arc(static_cast<std::size_t>(n), -1);

  int touched = -1;
  for (int round = 0; round < n; ++round) {
    touched = -1;
    for (std::size_t a = 0; a < rn.arcs.size(); ++a) {
      const auto& arc = rn.arcs[a];
      if (arc.residual <= kAmpEps) continue;
      if (dist[static_cast<std::size_t>(arc.from)] + arc.unit_cost <
          dist[static_cast<std::size_t>(arc.to)] - 1e-12) {
        dist[static_cast<std::size_t>(arc.to)] =
            dist[static_cast<std::size_t>(arc.from)] + arc.unit_cost;
        parent_arc[static_cast<std::size_t>(arc.to)] = static_cast<int>(a);
        touched = arc.to;
      }
    }
    if (touched < 0) return {};
  }

  // A node relaxed on the n-th pass lies on (or hangs off) a negative
  // cycle; walking n parents lands inside the cycle itself.
  int node = touched;
  for (int i = 0; i < n; ++i)
    node = rn.arcs[static_cast<std::size_t>(
                       parent_arc[static_cast<std::size_t>(node)])]
               .from;

  std::vector<int> cycle;
  int cur = node;
  do {
    const int a = parent_arc[static_cast<std::size_t>(cur)];
    cycle.push_back(a);
    cur = rn.arcs[static_cast<std::size_t>(a)].from;
  } while (cur != node);
  std::reverse(cycle.begin(), cycle.end());
  return cycle;
}

}  // namespace

std::vector<WireState> cancel_negative_cycles(const NetPorts& ports,
                                              std::vector<WireState> wires,
                                              const DeviceConstants& dev) {
  check_device(dev);
  const std::size_t cap = 10 * wires.size() * wires.size() + 10;
  for (std::size_t round = 0; round < cap; ++round) {
    const auto rn = build_residual(ports, wires, dev);
    const auto cycle = find_negative_cycle(rn);
    if (cycle.empty()) {
      for (auto& w : wires) w.width = effective_width(w.psi, dev);
      return wires;
    }

    double cycle_cost = 0.0;
    double bottleneck = std::numeric_limits<double>::infinity();
    for (int a : cycle) {
      cycle_cost += rn.arcs[static_cast<std::size_t>(a)].unit_cost;
      bottleneck =
          std::min(bottleneck, rn.arcs[static_cast<std::size_t>(a)].residual);
    }
    if (cycle_cost >= -1e-12 || bottleneck <= kAmpEps) {
      for (auto& w : wires) w.width = effective_width(w.psi, dev);
      return wires;
    }

    for (int a : cycle) {
      const auto& arc = rn.arcs[static_cast<std::size_t>(a)];
      auto& w = wires[static_cast<std::size_t>(arc.wire)];
      if (arc.backward) {
        w.psi -= bottleneck;
        w.headroom += bottleneck;
      } else {
        w.psi += bottleneck;
        w.headroom -= bottleneck;
      }
      if (w.psi < kAmpEps && w.psi > -kAmpEps) {
        w.headroom += w.psi;
        w.psi = 0.0;
      }
    }
  }
  throw RefinementError("cycle canceling did not converge");
}

// ---------------------------------------------------------------------------
// Connectivity

namespace {

class Dsu {
 public:
  explicit Dsu(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      parent_[static_cast<std::size_t>(x)] =
          parent_[static_cast<std::size_t>(
              parent_[static_cast<std::size_t>(x)])];
      x = parent_[static_cast<std::size_t>(x)];
    }
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[static_cast<std::size_t>(b)] = a;
    return true;
  }

 private:
  std::vector<int> parent_;
};

/// True when every port reaches every other along directed arcs: carrying
/// wires go one way, augmentations and same-subnet links both ways.
bool strongly_connected(const NetPorts& ports,
                        std::span<const WireState> wires) {
  const int n = static_cast<int>(ports.position.size());
  if (n <= 1) return true;
  std::vector<std::vector<int>> fwd(static_cast<std::size_t>(n));
  std::vector<std::vector<int>> rev(static_cast<std::size_t>(n));
  const auto link = [&](int a, int b) {
    fwd[static_cast<std::size_t>(a)].push_back(b);
    rev[static_cast<std::size_t>(b)].push_back(a);
  };
  for (const auto& w : wires) {
    if (w.augmentation) {
      link(w.src, w.dst);
      link(w.dst, w.src);
    } else if (w.psi > kAmpEps) {
      link(w.src, w.dst);
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (ports.subnet[static_cast<std::size_t>(i)] ==
          ports.subnet[static_cast<std::size_t>(j)]) {
        link(i, j);
        link(j, i);
      }

  const auto reaches_all = [&](const std::vector<std::vector<int>>& adj) {
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int v : adj[static_cast<std::size_t>(u)])
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = 1;
          ++count;
          stack.push_back(v);
        }
    }
    return count == n;
  };
  return reaches_all(fwd) && reaches_all(rev);
}

}  // namespace

std::vector<WireState> ensure_strong_connectivity(const NetPorts& ports,
                                                  std::vector<WireState> wires,
                                                  const DeviceConstants& dev,
                                                  double via_cost) {
  check_device(dev);
  const int n = static_cast<int>(ports.position.size());
  for (int attempt = 0; attempt < 3; ++attempt) {
    if (strongly_connected(ports, wires)) return wires;

    // Spanning tree over subnets, cheapest cross-subnet port pairs first.
    int max_label = 0;
    for (int s : ports.subnet) max_label = std::max(max_label, s);
    Dsu dsu(max_label + 1);
    // Subnets already joined by a carrying wire in both directions are not:
    // carrying arcs are one-way, so the tree must span every subnet anyway;
    // only existing augmentations count as joined.
    for (const auto& w : wires)
      if (w.augmentation)
        dsu.unite(ports.subnet[static_cast<std::size_t>(w.src)],
                  ports.subnet[static_cast<std::size_t>(w.dst)]);

    struct Candidate {
      double weight;
      int a;
      int b;
    };
    std::vector<Candidate> cands;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        if (ports.subnet[static_cast<std::size_t>(i)] ==
            ports.subnet[static_cast<std::size_t>(j)])
          continue;
        const auto& p = ports.position[static_cast<std::size_t>(i)];
        const auto& q = ports.position[static_cast<std::size_t>(j)];
        const double dz = via_cost * (p.layer - q.layer);
        const double weight = std::sqrt(static_cast<double>(p.x - q.x) *
                                            (p.x - q.x) +
                                        static_cast<double>(p.y - q.y) *
                                            (p.y - q.y) +
                                        dz * dz);
        cands.push_back({weight, i, j});
      }
    std::sort(cands.begin(), cands.end(),
              [](const Candidate& a, const Candidate& b) {
                if (a.weight != b.weight) return a.weight < b.weight;
                if (a.a != b.a) return a.a < b.a;
                return a.b < b.b;
              });

    bool added = false;
    for (const auto& c : cands) {
      if (!dsu.unite(ports.subnet[static_cast<std::size_t>(c.a)],
                     ports.subnet[static_cast<std::size_t>(c.b)]))
        continue;
      WireState w;
      w.src = c.a;
      w.dst = c.b;
      w.length = wire_length(ports.position[static_cast<std::size_t>(c.a)],
                             ports.position[static_cast<std::size_t>(c.b)],
                             via_cost);
      w.psi = 0.0;
      w.headroom = 0.0;
      w.width = std::max({effective_width(0.0, dev),
                          phase_limited_width(0.0, w.length, dev),
                          dev.delta_0});
      w.augmentation = true;
      wires.push_back(w);
      added = true;
    }
    if (!added && !strongly_connected(ports, wires))
      throw RefinementError("cannot restore strong connectivity");
  }
  if (!strongly_connected(ports, wires))
    throw RefinementError("cannot restore strong connectivity");
  return wires;
}

// ---------------------------------------------------------------------------
// Whole-net refinement

RefinedWiring method2_pipeline(const CircuitSpec& spec, const Solution& s,
                               const DeviceConstants& dev, double via_cost) {
  RefinedWiring out;
  for (const auto& net : spec.nets) {
    const auto ports = net_ports(spec, s, net);
    auto wires = assign_amplitudes(ports, dev, via_cost);
    wires = ensure_strong_connectivity(ports, wires, dev, via_cost);

    RefinedNet refined;
    for (auto& w : wires) {
      if (!w.augmentation && w.psi <= kAmpEps) continue;
      if (!w.augmentation) {
        w.width = effective_width(w.psi, dev);
        refined.flow_area += w.length * w.width;
        refined.amplitude_area += w.length * w.psi;
      }
      refined.wires.push_back(w);
    }
    out.total_area += refined.flow_area;
    out.nets.push_back(std::move(refined));
  }
  return out;
}

}  // namespace qtam
