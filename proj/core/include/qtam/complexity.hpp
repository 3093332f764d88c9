#pragma once

#include <iosfwd>
#include <vector>

namespace qtam {

/// Cost-model inputs: dominance measures per comparison, iterations,
/// archive/population size, objective count.
struct ComplexityParams {
  int dominance_measures = 3;
  int iterations = 100;
  int population = 500;
  int objectives = 5;
};

/// Annealing cost model: measures * iterations * population *
/// (objectives + log2(population)).
double qtam_ops(const ComplexityParams& p);

/// Plain elitist-GA cost model: iterations * objectives * population^2.
double nsga2_ops(const ComplexityParams& p);

/// Tree-accelerated GA cost model: iterations * objectives * population *
/// log2(population).
double nsga2_opt_ops(const ComplexityParams& p);

struct SweepRow {
  int iterations = 0;
  int population = 0;
  double qtam = 0.0;
  double nsga2 = 0.0;
  double nsga2_opt = 0.0;
};

/// Full grid over [it_lo, it_hi] x [pop_lo, pop_hi] with the given strides.
std::vector<SweepRow> complexity_sweep(int it_lo, int it_hi, int it_step,
                                       int pop_lo, int pop_hi, int pop_step,
                                       int dominance_measures, int objectives);

/// CSV with header n_it,pop,qtam,nsga2,nsga2_opt.
void write_complexity_csv(std::ostream& out,
                          const std::vector<SweepRow>& rows);

}  // namespace qtam
