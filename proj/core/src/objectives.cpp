#include "qtam/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace qtam {

std::pair<double, double> violation_sums(const ViolationSet& v) {
  double g = 0.0;
  double c = 0.0;
  for (double x : v.constraints) {
    if (x > 0.0)
      throw std::invalid_argument("constraint violations must be <= 0");
    g += x;
  }
  for (double x : v.closeness) {
    if (x > 0.0)
      throw std::invalid_argument("closeness violations must be <= 0");
    c += x;
  }
  return {g, c};
}

void RangeTracker::observe(const ObjectiveVector& f) {
  if (!any_) {
    lo_ = f.f;
    hi_ = f.f;
    any_ = true;
    return;
  }
  for (int i = 0; i < 5; ++i) {
    lo_[i] = std::min(lo_[i], f.f[i]);
    hi_[i] = std::max(hi_[i], f.f[i]);
  }
}

void RangeTracker::merge(const RangeTracker& other) {
  if (!other.any_) return;
  if (!any_) {
    *this = other;
    return;
  }
  for (int i = 0; i < 5; ++i) {
    lo_[i] = std::min(lo_[i], other.lo_[i]);
    hi_[i] = std::max(hi_[i], other.hi_[i]);
  }
}

double RangeTracker::range(int i) const {
  if (!any_) return 1.0;
  const double span = hi_[i] - lo_[i];
  return span > 0.0 ? span : 1.0;
}

std::array<double, 5> RangeTracker::ranges() const {
  std::array<double, 5> out;
  for (int i = 0; i < 5; ++i) out[i] = range(i);
  return out;
}

double area_f1(const CircuitSpec& spec, const Solution& s) {
  const auto instances = materialize_instances(spec);
  if (instances.empty() || s.placements.empty()) return 0.0;
  int y_min = spec.grid_height;
  int y_max = -1;
  std::set<int> layers;
  for (std::size_t i = 0; i < instances.size(); ++i) {
    const auto& g = spec.gates[instances[i].gate];
    const auto& p = s.placements[i];
    const auto [fw, fh] = footprint(g, p.rotation);
    (void)fw;
    y_min = std::min(y_min, p.pos.y);
    y_max = std::max(y_max, p.pos.y + fh);
    layers.insert(p.layer);
  }
  const double height = static_cast<double>(y_max - y_min);
  return height * static_cast<double>(layers.size());
}

double wire_length(const GridVertex& a, const GridVertex& b, double via_cost) {
  return std::abs(a.x - b.x) + std::abs(a.y - b.y) +
         via_cost * std::abs(a.layer - b.layer);
}

double wire_area_f2(std::span<const std::pair<double, double>> length_width) {
  double acc = 0.0;
  for (const auto& [len, width] : length_width) acc += len * width;
  return acc;
}

std::vector<double> symmetry_violations(const CircuitSpec& spec,
                                        const Solution& s) {
  std::vector<double> out;
  const double axis = spec.axis();
  for (std::size_t g = 0; g < spec.gates.size(); ++g) {
    const auto& gate = spec.gates[g];
    if (gate.symmetry.kind == SymmetryClass::SelfSymmetric) {
      for (std::size_t o = 0; o < gate.rounds.size(); ++o) {
        const auto& p =
            s.placements[instance_index(spec, static_cast<int>(g),
                                        static_cast<int>(o))];
        const auto [fw, fh] = footprint(gate, p.rotation);
        (void)fh;
        out.push_back(-std::abs(axis - (p.pos.x + fw / 2.0)));
      }
      continue;
    }
    if (gate.symmetry.kind != SymmetryClass::PairMember) continue;
    const int partner = spec.gate_index(gate.symmetry.partner);
    // Count each pair once, from the lexicographically first member.
    if (partner < 0 || partner < static_cast<int>(g)) continue;
    const std::size_t rounds =
        std::min(gate.rounds.size(), spec.gates[partner].rounds.size());
    for (std::size_t o = 0; o < rounds; ++o) {
      const auto& a =
          s.placements[instance_index(spec, static_cast<int>(g),
                                      static_cast<int>(o))];
      const auto& b =
          s.placements[instance_index(spec, partner, static_cast<int>(o))];
      const auto [fw, fh] = footprint(gate, a.rotation);
      (void)fh;
      const double center = (a.pos.x + b.pos.x + fw) / 2.0;
      out.push_back(-(std::abs(axis - center) + std::abs(a.pos.y - b.pos.y)));
    }
  }
  return out;
}

double measurement_f5(const Solution& s) {
  return static_cast<double>(s.measurement.rounds) *
         static_cast<double>(s.measurement.gates);
}

double scalarized_cost(const ObjectiveVector& f,
                       std::span<const double> alpha,
                       std::span<const std::pair<double, double>> secondary) {
  if (alpha.size() != 5)
    throw std::invalid_argument("scalarization needs exactly 5 weights");
  double acc = 0.0;
  for (int i = 0; i < 5; ++i) acc += alpha[i] * f.f[i];
  for (const auto& [w, v] : secondary) acc += w * v;
  return acc;
}

}  // namespace qtam
