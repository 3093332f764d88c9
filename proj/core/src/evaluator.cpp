#include "qtam/evaluator.hpp"

#include <algorithm>
#include <stdexcept>

#include "qtam/dominance.hpp"
#include "qtam/errors.hpp"
#include "qtam/router.hpp"

namespace qtam {

namespace {

const std::vector<std::string> kSecondaryNames = {
    "divergence", "route_cost", "wire_amplitude_area"};

}  // namespace

Evaluator::Evaluator(const CircuitSpec& spec, EvaluationSettings settings)
    : spec_(&spec), settings_(std::move(settings)) {
  if (spec.basis_dim != 2)
    throw std::invalid_argument(
        "only two-level systems are supported (d = " +
        std::to_string(spec.basis_dim) + " in the circuit)");
  if (settings_.closeness_epsilon < 0.0)
    throw ConfigError("closeness epsilon must be >= 0");
  for (const auto& [name, weight] : settings_.secondary) {
    (void)weight;
    if (std::find(kSecondaryNames.begin(), kSecondaryNames.end(), name) ==
        kSecondaryNames.end())
      throw ConfigError("unknown secondary objective: " + name);
  }

  cut_ = cut_objective(spec.problem);

  if (spec.reference_distribution) {
    reference_ = *spec.reference_distribution;
  } else if (spec.reference_circuit) {
    const auto& rc = *spec.reference_circuit;
    if (rc.problem.vertices != spec.problem.vertices)
      throw ConfigError(
          "reference circuit must act on the same number of systems");
    reference_ = output_distribution(
        evolve(rc.problem, rc.params, settings_.memory_budget));
  }
}

Evaluation Evaluator::evaluate(Solution& s) const {
  const auto& spec = *spec_;

  const StateVector psi =
      evolve(spec.problem, s.qaoa_params, settings_.memory_budget);

  Evaluation ev;
  ev.expectation = expectation(psi, cut_);
  ev.distribution = output_distribution(psi);

  if (s.routes_stale) s = route_all(spec, std::move(s), settings_.via_cost);

  const RefinedWiring wiring =
      method2_pipeline(spec, s, settings_.device, settings_.via_cost);

  ev.objectives.f[0] = area_f1(spec, s);
  ev.objectives.f[1] = wiring.total_area;
  ev.objectives.f[2] = -ev.expectation;
  ev.objectives.f[3] = static_cast<double>(s.active_inputs);
  ev.objectives.f[4] = measurement_f5(s);

  for (const auto& net : wiring.nets)
    ev.wire_amplitude_area += net.amplitude_area;

  ev.violations.constraints = symmetry_violations(spec, s);
  for (const auto& route : s.routes) {
    ev.route_cost += route.cost;
    if (route.unreachable) ev.violations.constraints.push_back(-1.0);
  }

  if (!reference_.empty()) {
    ev.divergence = relative_entropy(reference_, ev.distribution);
    const double excess = ev.divergence - settings_.closeness_epsilon;
    ev.violations.closeness.push_back(excess > 0.0 ? -excess : 0.0);
  }

  std::tie(ev.g_sum, ev.c_sum) = violation_sums(ev.violations);

  std::vector<std::pair<double, double>> secondary;
  for (const auto& [name, weight] : settings_.secondary) {
    double value = 0.0;
    if (name == "divergence")
      value = ev.divergence;
    else if (name == "route_cost")
      value = ev.route_cost;
    else
      value = ev.wire_amplitude_area;
    secondary.emplace_back(weight, value);
  }
  ev.scalar = scalarized_cost(ev.objectives, settings_.alpha, secondary);

  return ev;
}

}  // namespace qtam
