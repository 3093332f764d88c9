#include "qtam/qaoa.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>

#include "qtam/errors.hpp"
#include "qtam/rng.hpp"

namespace qtam {

namespace {

constexpr std::complex<double> kImag{0.0, 1.0};

void check_state(const StateVector& psi) {
  if (psi.num_systems < 1)
    throw std::invalid_argument("state vector has no systems");
  if (psi.amplitudes.size() != (std::size_t{1} << psi.num_systems))
    throw std::invalid_argument("state vector length is not 2^n");
}

}  // namespace

std::size_t StateVector::bytes_required(int n) {
  if (n >= 60) return std::numeric_limits<std::size_t>::max();
  return sizeof(std::complex<double>) * (std::size_t{1} << n);
}

DiagonalObjective cut_objective(const ProblemGraph& graph) {
  const int n = graph.vertices;
  if (n < 1) throw std::invalid_argument("problem graph has no vertices");
  if (n >= 30)
    throw std::invalid_argument("cut objective table too large for n >= 30");
  DiagonalObjective c;
  c.num_systems = n;
  c.edges = graph.edges;
  c.values.assign(std::size_t{1} << n, 0.0);
  for (const auto& [a, b] : graph.edges) {
    if (a < 0 || b < 0 || a >= n || b >= n)
      throw std::invalid_argument("problem edge endpoint out of range");
    for (std::size_t z = 0; z < c.values.size(); ++z) {
      const int za = static_cast<int>((z >> a) & 1);
      const int zb = static_cast<int>((z >> b) & 1);
      if (za != zb) c.values[z] += 1.0;
    }
  }
  return c;
}

StateVector uniform_superposition(int n, int basis_dim, std::size_t budget) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (basis_dim != 2)
    throw std::invalid_argument(
        "only two-level systems are supported (d = " +
        std::to_string(basis_dim) + " requested)");
  const std::size_t need = StateVector::bytes_required(n);
  if (need >= budget)
    throw CapacityError("state vector for n = " + std::to_string(n) +
                        " needs " + std::to_string(need) +
                        " bytes, at or above the budget of " +
                        std::to_string(budget));
  StateVector psi;
  psi.num_systems = n;
  const std::size_t dim = std::size_t{1} << n;
  psi.amplitudes.assign(dim, {1.0 / std::sqrt(static_cast<double>(dim)), 0.0});
  return psi;
}

StateVector apply_phase_unitary(StateVector psi, const DiagonalObjective& c,
                                double gamma) {
  check_state(psi);
  if (c.num_systems != psi.num_systems ||
      c.values.size() != psi.amplitudes.size())
    throw std::invalid_argument("objective arity does not match the state");
  for (std::size_t z = 0; z < psi.amplitudes.size(); ++z)
    psi.amplitudes[z] *= std::polar(1.0, -gamma * c.values[z]);
  return psi;
}

StateVector apply_edge_phase(StateVector psi,
                             std::span<const std::pair<int, int>> edges,
                             std::span<const double> gamma) {
  check_state(psi);
  if (edges.size() != gamma.size())
    throw std::invalid_argument("one phase angle per edge required");
  for (std::size_t e = 0; e < edges.size(); ++e) {
    const auto [a, b] = edges[e];
    if (a < 0 || b < 0 || a >= psi.num_systems || b >= psi.num_systems)
      throw std::invalid_argument("phase edge endpoint out of range");
    for (std::size_t z = 0; z < psi.amplitudes.size(); ++z) {
      // z encodes each system as +1 (bit 0) or -1 (bit 1).
      const double sign = (((z >> a) ^ (z >> b)) & 1) ? -1.0 : 1.0;
      psi.amplitudes[z] *= std::polar(1.0, gamma[e] * sign);
    }
  }
  return psi;
}

StateVector apply_mixer_unitary(StateVector psi, std::span<const double> mu) {
  check_state(psi);
  if (mu.size() != static_cast<std::size_t>(psi.num_systems))
    throw std::invalid_argument("one mixer angle per system required");
  for (int q = 0; q < psi.num_systems; ++q) {
    const double c = std::cos(mu[q]);
    const double s = std::sin(mu[q]);
    const std::size_t bit = std::size_t{1} << q;
    for (std::size_t z = 0; z < psi.amplitudes.size(); ++z) {
      if (z & bit) continue;
      const auto a = psi.amplitudes[z];
      const auto b = psi.amplitudes[z | bit];
      psi.amplitudes[z] = c * a - kImag * s * b;
      psi.amplitudes[z | bit] = -kImag * s * a + c * b;
    }
  }
  return psi;
}

StateVector evolve(const ProblemGraph& graph, const ParameterCollections& pc,
                   std::size_t budget) {
  const int n = graph.vertices;
  if (pc.mixer.size() != pc.phase.size())
    throw std::invalid_argument("mixer and phase stacks differ in depth");
  for (const auto& row : pc.mixer)
    if (row.size() != static_cast<std::size_t>(n))
      throw std::invalid_argument("mixer collection arity must equal n");
  for (const auto& row : pc.phase)
    if (row.size() != graph.edges.size())
      throw std::invalid_argument("phase collection arity must equal |E|");

  StateVector psi = uniform_superposition(n, 2, budget);
  for (int t = 0; t < pc.depth(); ++t) {
    psi = apply_edge_phase(std::move(psi), graph.edges, pc.phase[t]);
    psi = apply_mixer_unitary(std::move(psi), pc.mixer[t]);
  }
  return psi;
}

double expectation(const StateVector& psi, const DiagonalObjective& c) {
  check_state(psi);
  if (c.values.size() != psi.amplitudes.size())
    throw std::invalid_argument("objective arity does not match the state");
  double acc = 0.0;
  for (std::size_t z = 0; z < psi.amplitudes.size(); ++z)
    acc += std::norm(psi.amplitudes[z]) * c.values[z];
  return acc;
}

std::vector<double> output_distribution(const StateVector& psi) {
  check_state(psi);
  std::vector<double> p(psi.amplitudes.size());
  for (std::size_t z = 0; z < p.size(); ++z)
    p[z] = std::norm(psi.amplitudes[z]);
  return p;
}

// ---------------------------------------------------------------------------
// Budgeted angle search

namespace {

struct Coordinate {
  int collection;
  bool phase;
  int index;
};

class BudgetedEvaluator {
 public:
  BudgetedEvaluator(const ProblemGraph& graph, const DiagonalObjective& cut,
                    int budget, std::size_t memory_budget)
      : graph_(graph), cut_(cut), budget_(budget), memory_(memory_budget) {}

  /// One state evolution, or nullopt once the budget is spent.
  std::optional<double> operator()(const ParameterCollections& pc) {
    if (spent_ >= budget_) return std::nullopt;
    ++spent_;
    return expectation(evolve(graph_, pc, memory_), cut_);
  }

  int spent() const { return spent_; }

 private:
  const ProblemGraph& graph_;
  const DiagonalObjective& cut_;
  int budget_;
  std::size_t memory_;
  int spent_ = 0;
};

double& coordinate_ref(ParameterCollections& pc, const Coordinate& c) {
  return c.phase ? pc.phase[c.collection][c.index]
                 : pc.mixer[c.collection][c.index];
}

/// Improve one coordinate: coarse scan over the box followed by a
/// golden-section polish inside the best scan cell. Returns the value at the
/// final point (which is never worse than `current`).
double improve_coordinate(ParameterCollections& pc, const Coordinate& coord,
                          double current, BudgetedEvaluator& eval) {
  constexpr int kScanPoints = 16;
  constexpr double kGolden = 0.6180339887498949;
  const double pi = std::numbers::pi;
  const double step = pi / (kScanPoints - 1);

  double best_x = coordinate_ref(pc, coord);
  double best_v = current;

  auto probe = [&](double x) -> bool {
    coordinate_ref(pc, coord) = x;
    const auto v = eval(pc);
    if (!v) return false;
    if (*v > best_v) {
      best_v = *v;
      best_x = x;
    }
    return true;
  };

  for (int i = 0; i < kScanPoints; ++i)
    if (!probe(i * step)) break;

  double lo = std::max(0.0, best_x - step);
  double hi = std::min(pi, best_x + step);
  double x1 = hi - kGolden * (hi - lo);
  double x2 = lo + kGolden * (hi - lo);
  for (int iter = 0; iter < 24 && hi - lo > 1e-4; ++iter) {
    coordinate_ref(pc, coord) = x1;
    const auto v1 = eval(pc);
    if (!v1) break;
    coordinate_ref(pc, coord) = x2;
    const auto v2 = eval(pc);
    if (!v2) {
      if (*v1 > best_v) {
        best_v = *v1;
        best_x = x1;
      }
      break;
    }
    if (*v1 > best_v) {
      best_v = *v1;
      best_x = x1;
    }
    if (*v2 > best_v) {
      best_v = *v2;
      best_x = x2;
    }
    if (*v1 < *v2) {
      lo = x1;
      x1 = x2;
      x2 = lo + kGolden * (hi - lo);
    } else {
      hi = x2;
      x2 = x1;
      x1 = hi - kGolden * (hi - lo);
    }
  }

  coordinate_ref(pc, coord) = best_x;
  return best_v;
}

}  // namespace

MaximizeResult maximize_objective(const ProblemGraph& graph, int depth,
                                  int budget, std::uint64_t seed,
                                  std::size_t memory_budget) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  if (budget < 1) throw std::invalid_argument("budget must be >= 1");
  const int n = graph.vertices;
  const int m = static_cast<int>(graph.edges.size());
  const DiagonalObjective cut = cut_objective(graph);
  BudgetedEvaluator eval(graph, cut, budget, memory_budget);
  RandomSource rng(seed);

  std::vector<Coordinate> coords;
  for (int t = 0; t < depth; ++t) {
    for (int e = 0; e < m; ++e) coords.push_back({t, true, e});
    for (int q = 0; q < n; ++q) coords.push_back({t, false, q});
  }

  MaximizeResult best;
  best.value = -std::numeric_limits<double>::infinity();

  constexpr int kStarts = 4;
  for (int start = 0; start < kStarts; ++start) {
    ParameterCollections pc;
    pc.mixer.assign(depth, std::vector<double>(n, 0.0));
    pc.phase.assign(depth, std::vector<double>(m, 0.0));
    if (start > 0)
      for (auto& c : coords)
        coordinate_ref(pc, c) = rng.uniform(0.0, std::numbers::pi);

    const auto v0 = eval(pc);
    if (!v0) break;
    double cur = *v0;

    for (int pass = 0; pass < 20; ++pass) {
      const double before = cur;
      for (const auto& c : coords) {
        cur = improve_coordinate(pc, c, cur, eval);
        if (eval.spent() >= budget) break;
      }
      if (cur - before < 1e-9 || eval.spent() >= budget) break;
    }

    if (cur > best.value) {
      best.value = cur;
      best.params = pc;
    }
    if (eval.spent() >= budget) break;
  }

  best.evaluations = eval.spent();
  return best;
}

}  // namespace qtam
