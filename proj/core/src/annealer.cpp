#include "qtam/annealer.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace qtam {

double TemperatureSchedule::at(double t) const {
  if (scale <= 0.0) throw std::invalid_argument("schedule scale must be > 0");
  return t_max * std::exp(-rate * t / scale);
}

double clamp_exponent(double e) { return std::clamp(e, -500.0, 500.0); }

double acceptance_dominated(double d_f, double d_g, double d_c, double t_f,
                            double t_g, double t_c) {
  const double e = clamp_exponent(d_f * t_f + d_g * t_g + d_c * t_c);
  return 1.0 / (1.0 + std::exp(e));
}

double acceptance_min_gap(double d_min) {
  return 1.0 / (1.0 + std::exp(clamp_exponent(-d_min)));
}

AverageDominance average_dominances(const RankView& nu, const RankView& xi,
                                    std::span<const RankView> dominators,
                                    std::span<const double> ranges) {
  AverageDominance avg;
  for (const auto& dom : dominators) {
    avg.f += objective_dominance(dom.f, nu.f, ranges).d;
    avg.g -= constraint_dominance(nu.constraint, dom.constraint).d;
    avg.c -= closeness_dominance(nu.closeness, dom.closeness).d;
  }
  avg.f += objective_dominance(xi.f, nu.f, ranges).d;
  avg.g -= constraint_dominance(nu.constraint, xi.constraint).d;
  avg.c -= closeness_dominance(nu.closeness, xi.closeness).d;
  const double denom = static_cast<double>(dominators.size()) + 1.0;
  avg.f /= denom;
  avg.g /= denom;
  avg.c /= denom;
  return avg;
}

// ---------------------------------------------------------------------------
// Archive

namespace {

DominanceOutcome counted_check(const RankView& x, const RankView& y,
                               std::span<const double> ranges,
                               OpCounters* counters) {
  // Charged as one full measure triple even when an early measure decides.
  if (counters)
    counters->dominance_evaluations.fetch_add(3, std::memory_order_relaxed);
  return pareto_check(x, y, ranges);
}

}  // namespace

ParetoArchive::ParetoArchive(int capacity) : capacity_(capacity) {
  if (capacity < 1) throw std::invalid_argument("archive capacity must be >= 1");
}

void ParetoArchive::insert(EvaluatedSolution es, const RangeTracker& ranges,
                           OpCounters* counters) {
  const auto r = ranges.ranges();
  const auto nu = es.rank();
  std::vector<char> dominated(members_.size(), 0);
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (counters)
      counters->archive_comparisons.fetch_add(1, std::memory_order_relaxed);
    if (members_[i].solution == es.solution) return;
    const auto rel = counted_check(members_[i].rank(), nu, r, counters);
    if (rel == DominanceOutcome::XDominatesY) return;
    if (rel == DominanceOutcome::YDominatesX) dominated[i] = 1;
  }

  std::vector<EvaluatedSolution> kept;
  kept.reserve(members_.size() + 1);
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (!dominated[i]) kept.push_back(std::move(members_[i]));
  kept.push_back(std::move(es));
  members_ = std::move(kept);

  if (static_cast<int>(members_.size()) <= capacity_) return;

  const auto distance = crowding_distances();
  std::vector<std::size_t> order(members_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (distance[a] != distance[b]) return distance[a] > distance[b];
    return a < b;
  });
  std::vector<char> keep(members_.size(), 0);
  for (int i = 0; i < capacity_; ++i) keep[order[static_cast<std::size_t>(i)]] = 1;
  std::vector<EvaluatedSolution> pruned;
  pruned.reserve(static_cast<std::size_t>(capacity_));
  for (std::size_t i = 0; i < members_.size(); ++i)
    if (keep[i]) pruned.push_back(std::move(members_[i]));
  members_ = std::move(pruned);
}

std::vector<double> ParetoArchive::crowding_distances() const {
  const std::size_t n = members_.size();
  std::vector<double> dist(n, 0.0);
  if (n <= 2) {
    std::fill(dist.begin(), dist.end(),
              std::numeric_limits<double>::infinity());
    return dist;
  }
  std::vector<std::size_t> order(n);
  for (int obj = 0; obj < 5; ++obj) {
    for (std::size_t i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      const double fa = members_[a].eval.objectives.f[obj];
      const double fb = members_[b].eval.objectives.f[obj];
      if (fa != fb) return fa < fb;
      return a < b;
    });
    const double lo = members_[order.front()].eval.objectives.f[obj];
    const double hi = members_[order.back()].eval.objectives.f[obj];
    dist[order.front()] = std::numeric_limits<double>::infinity();
    dist[order.back()] = std::numeric_limits<double>::infinity();
    if (hi <= lo) continue;
    for (std::size_t i = 1; i + 1 < n; ++i) {
      const double gap = members_[order[i + 1]].eval.objectives.f[obj] -
                         members_[order[i - 1]].eval.objectives.f[obj];
      dist[order[i]] += gap / (hi - lo);
    }
  }
  return dist;
}

bool ParetoArchive::mutually_nondominating(const RangeTracker& ranges) const {
  const auto r = ranges.ranges();
  for (std::size_t i = 0; i < members_.size(); ++i)
    for (std::size_t j = i + 1; j < members_.size(); ++j)
      if (pareto_check(members_[i].rank(), members_[j].rank(), r) !=
          DominanceOutcome::Mutual)
        return false;
  return true;
}

// ---------------------------------------------------------------------------
// Move drawing

namespace {

class MoveGenerator {
 public:
  MoveGenerator(const CircuitSpec& spec, const AnnealerConfig& cfg)
      : spec_(spec), cfg_(cfg), instances_(materialize_instances(spec)) {
    for (std::size_t g = 0; g < spec.gates.size(); ++g) {
      const auto& gate = spec.gates[g];
      if (gate.symmetry.kind == SymmetryClass::SelfSymmetric) {
        symmetric_gates_.push_back(static_cast<int>(g));
      } else if (gate.symmetry.kind == SymmetryClass::PairMember) {
        const int partner = spec.gate_index(gate.symmetry.partner);
        if (partner > static_cast<int>(g))
          symmetric_gates_.push_back(static_cast<int>(g));
      }
    }
    for (std::size_t i = 0; i < spec.nets.size(); ++i)
      if (spec.nets[i].sources.size() + spec.nets[i].sinks.size() >= 3)
        separable_nets_.push_back(static_cast<int>(i));
  }

  std::optional<MoveDescriptor> draw(const Solution& s, RandomSource& rng) {
    const auto kind = rng.pick_weighted(cfg_.move_weights);
    switch (kind) {
      case 0: {  // relocate within the layer
        if (instances_.empty()) return std::nullopt;
        const int i = rng.uniform_int(static_cast<int>(instances_.size()));
        const auto& g = spec_.gates[instances_[static_cast<std::size_t>(i)].gate];
        const auto [fw, fh] = footprint(g, s.placements[static_cast<std::size_t>(i)].rotation);
        if (fw > spec_.grid_width || fh > spec_.grid_height)
          return std::nullopt;
        GridPos to{rng.uniform_int(spec_.grid_width - fw + 1),
                   rng.uniform_int(spec_.grid_height - fh + 1)};
        return MoveDescriptor{RelocateMove{i, to}};
      }
      case 1: {  // layer reassignment
        if (instances_.empty() || spec_.num_layers < 2) return std::nullopt;
        const int i = rng.uniform_int(static_cast<int>(instances_.size()));
        const int to = 1 + rng.uniform_int(spec_.num_layers);
        return MoveDescriptor{LayerMove{i, to}};
      }
      case 2: {  // rotation
        if (instances_.empty()) return std::nullopt;
        const int i = rng.uniform_int(static_cast<int>(instances_.size()));
        return MoveDescriptor{
            RotateMove{i, static_cast<Rotation>(rng.uniform_int(4))}};
      }
      case 3: {  // coordinated symmetric placement
        if (symmetric_gates_.empty()) return std::nullopt;
        const int g = symmetric_gates_[static_cast<std::size_t>(
            rng.uniform_int(static_cast<int>(symmetric_gates_.size())))];
        const auto& gate = spec_.gates[static_cast<std::size_t>(g)];
        const int ordinal =
            rng.uniform_int(static_cast<int>(gate.rounds.size()));
        const int idx = instance_index(spec_, g, ordinal);
        const auto [fw, fh] =
            footprint(gate, s.placements[static_cast<std::size_t>(idx)].rotation);
        if (fw > spec_.grid_width || fh > spec_.grid_height)
          return std::nullopt;
        const int x1 = rng.uniform_int(spec_.grid_width - fw + 1);
        const int y = rng.uniform_int(spec_.grid_height - fh + 1);
        return MoveDescriptor{SymmetryPairMove{g, ordinal, x1, y}};
      }
      case 4: {  // separation candidate choice
        if (separable_nets_.empty()) return std::nullopt;
        const int net = separable_nets_[static_cast<std::size_t>(
            rng.uniform_int(static_cast<int>(separable_nets_.size())))];
        return MoveDescriptor{SeparationMove{net, rng.uniform_int(64)}};
      }
      default: {  // angle nudge
        const auto& pc = s.qaoa_params;
        if (pc.depth() == 0) return std::nullopt;
        const int t = rng.uniform_int(pc.depth());
        const int n = static_cast<int>(pc.mixer[static_cast<std::size_t>(t)].size());
        const int m = static_cast<int>(pc.phase[static_cast<std::size_t>(t)].size());
        if (n + m == 0) return std::nullopt;
        const int pickd = rng.uniform_int(n + m);
        const bool phase = pickd >= n;
        const int index = phase ? pickd - n : pickd;
        return MoveDescriptor{
            AngleMove{t, phase, index, rng.gaussian(cfg_.angle_sigma)}};
      }
    }
  }

 private:
  const CircuitSpec& spec_;
  const AnnealerConfig& cfg_;
  std::vector<GateInstance> instances_;
  std::vector<int> symmetric_gates_;
  std::vector<int> separable_nets_;
};

}  // namespace

// ---------------------------------------------------------------------------
// Main loop

AnnealResult qtam_run(const Evaluator& evaluator, const AnnealerConfig& cfg,
                      OpCounters* shared_counters) {
  if (cfg.iterations < 0)
    throw std::invalid_argument("iterations must be >= 0");
  const auto& spec = evaluator.spec();
  RandomSource rng(cfg.seed);
  OpCounters local;
  OpCounters* counters = shared_counters ? shared_counters : &local;

  AnnealResult result{ParetoArchive(cfg.archive_capacity), {}, {}, {}, 0, 0};
  auto& archive = result.archive;
  auto& ranges = result.ranges;

  bool have_best = false;
  const auto remember_best = [&](const EvaluatedSolution& es) {
    if (!have_best || es.eval.scalar < result.best_scalar.eval.scalar) {
      result.best_scalar = es;
      have_best = true;
    }
  };

  for (int i = 0; i < cfg.archive_capacity; ++i) {
    Solution sol = random_solution(spec, cfg.qaoa_depth, rng);
    Evaluation ev = evaluator.evaluate(sol);
    ranges.observe(ev.objectives);
    EvaluatedSolution es{std::move(sol), std::move(ev)};
    remember_best(es);
    archive.insert(std::move(es), ranges, counters);
  }
  if (archive.empty())
    throw std::invalid_argument("archive is empty after seeding");

  EvaluatedSolution xi =
      archive.members()[static_cast<std::size_t>(
          rng.uniform_int(archive.size()))];

  MoveGenerator moves(spec, cfg);
  if (cfg.record_trace) result.trace.reserve(static_cast<std::size_t>(cfg.iterations));

  const auto log_step = [&](int t, StepCase step, double prob, bool accepted) {
    if (cfg.record_trace)
      result.trace.push_back({t, step, prob, accepted, archive.size()});
  };

  for (int t = 0; t < cfg.iterations; ++t) {
    std::optional<Solution> candidate;
    for (int attempt = 0; attempt < cfg.move_retry_limit && !candidate;
         ++attempt) {
      const auto move = moves.draw(xi.solution, rng);
      if (!move) continue;
      candidate = solution_clone_with_move(spec, xi.solution, *move);
    }
    if (!candidate) {
      log_step(t, StepCase::MoveRejected, 0.0, false);
      continue;
    }

    Evaluation ev = evaluator.evaluate(*candidate);
    ranges.observe(ev.objectives);
    EvaluatedSolution nu{std::move(*candidate), std::move(ev)};
    remember_best(nu);

    const auto r = ranges.ranges();
    const auto nu_rank = nu.rank();
    const auto xi_rank = xi.rank();

    std::vector<int> dominator_idx;
    std::vector<RankView> dominators;
    bool any_dominated = false;
    for (int i = 0; i < archive.size(); ++i) {
      if (counters)
        counters->archive_comparisons.fetch_add(1, std::memory_order_relaxed);
      const auto member_rank =
          archive.members()[static_cast<std::size_t>(i)].rank();
      const auto rel = counted_check(member_rank, nu_rank, r, counters);
      if (rel == DominanceOutcome::XDominatesY) {
        dominator_idx.push_back(i);
        dominators.push_back(member_rank);
      } else if (rel == DominanceOutcome::YDominatesX) {
        any_dominated = true;
      }
    }

    const auto rel = counted_check(xi_rank, nu_rank, r, counters);
    const double t_f = cfg.t_objective.at(t);
    const double t_g = cfg.t_constraint.at(t);
    const double t_c = cfg.t_closeness.at(t);

    if (rel == DominanceOutcome::XDominatesY) {
      // Current point dominates the candidate: tempered uphill acceptance
      // over the averaged gaps to everything that dominates it.
      const auto avg = average_dominances(nu_rank, xi_rank, dominators, r);
      const double p = acceptance_dominated(avg.f, avg.g, avg.c, t_f, t_g, t_c);
      const bool accept = rng.uniform() < p;
      if (accept) xi = std::move(nu);
      log_step(t, StepCase::DominatedByCurrent, p, accept);
    } else if (rel == DominanceOutcome::Mutual) {
      if (!dominators.empty()) {
        // Mutually nondominating with the current point but beaten inside
        // the archive: shift the averages by the current-point gaps.
        const auto avg = average_dominances(nu_rank, xi_rank, dominators, r);
        const double df = avg.f - objective_dominance(xi_rank.f, nu_rank.f, r).d;
        const double dg =
            avg.g + constraint_dominance(nu_rank.constraint,
                                         xi_rank.constraint).d;
        const double dc =
            avg.c + closeness_dominance(nu_rank.closeness,
                                        xi_rank.closeness).d;
        const double p = acceptance_dominated(df, dg, dc, t_f, t_g, t_c);
        const bool accept = rng.uniform() < p;
        if (accept) xi = std::move(nu);
        log_step(t, StepCase::DominatedByArchive, p, accept);
      } else if (!any_dominated) {
        archive.insert(nu, ranges, counters);
        xi = std::move(nu);
        log_step(t, StepCase::NondominatedInsert, 1.0, true);
      } else {
        archive.insert(nu, ranges, counters);
        xi = std::move(nu);
        log_step(t, StepCase::DominatesArchive, 1.0, true);
      }
    } else {  // candidate dominates the current point
      if (!dominators.empty()) {
        // Improved locally, still dominated in the archive: jump to the
        // least-distant dominator with the sigmoid of the smallest gap.
        double d_min = std::numeric_limits<double>::infinity();
        int arg_min = dominator_idx.front();
        for (std::size_t k = 0; k < dominators.size(); ++k) {
          const auto& member_rank = dominators[k];
          const double gap =
              objective_dominance(nu_rank.f, member_rank.f, r).d -
              (constraint_dominance(member_rank.constraint,
                                    nu_rank.constraint).d +
               closeness_dominance(member_rank.closeness,
                                   nu_rank.closeness).d);
          if (gap < d_min) {
            d_min = gap;
            arg_min = dominator_idx[k];
          }
        }
        const double p = acceptance_min_gap(d_min);
        if (rng.uniform() < p)
          xi = archive.members()[static_cast<std::size_t>(arg_min)];
        else
          xi = std::move(nu);
        log_step(t, StepCase::MinGapSwap, p, true);
      } else if (!any_dominated) {
        archive.insert(nu, ranges, counters);
        xi = std::move(nu);
        log_step(t, StepCase::ImprovedInsert, 1.0, true);
      } else {
        archive.insert(nu, ranges, counters);
        xi = std::move(nu);
        log_step(t, StepCase::ImprovedSweep, 1.0, true);
      }
    }
  }

  result.dominance_evaluations =
      counters->dominance_evaluations.load(std::memory_order_relaxed);
  result.archive_comparisons =
      counters->archive_comparisons.load(std::memory_order_relaxed);
  return result;
}

}  // namespace qtam
