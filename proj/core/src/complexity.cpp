#include "qtam/complexity.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace qtam {

namespace {

void check(const ComplexityParams& p) {
  if (p.dominance_measures < 1 || p.iterations < 1 || p.population < 1 ||
      p.objectives < 1)
    throw std::invalid_argument("complexity parameters must be >= 1");
}

}  // namespace

double qtam_ops(const ComplexityParams& p) {
  check(p);
  return static_cast<double>(p.dominance_measures) * p.iterations *
         p.population *
         (p.objectives + std::log2(static_cast<double>(p.population)));
}

double nsga2_ops(const ComplexityParams& p) {
  check(p);
  return static_cast<double>(p.iterations) * p.objectives * p.population *
         p.population;
}

double nsga2_opt_ops(const ComplexityParams& p) {
  check(p);
  return static_cast<double>(p.iterations) * p.objectives * p.population *
         std::log2(static_cast<double>(p.population));
}

std::vector<SweepRow> complexity_sweep(int it_lo, int it_hi, int it_step,
                                       int pop_lo, int pop_hi, int pop_step,
                                       int dominance_measures,
                                       int objectives) {
  if (it_lo < 1 || pop_lo < 1 || it_hi < it_lo || pop_hi < pop_lo ||
      it_step < 1 || pop_step < 1)
    throw std::invalid_argument("bad sweep ranges");
  std::vector<SweepRow> rows;
  for (int it = it_lo; it <= it_hi; it += it_step)
    for (int pop = pop_lo; pop <= pop_hi; pop += pop_step) {
      ComplexityParams p{dominance_measures, it, pop, objectives};
      rows.push_back({it, pop, qtam_ops(p), nsga2_ops(p), nsga2_opt_ops(p)});
    }
  return rows;
}

void write_complexity_csv(std::ostream& out,
                          const std::vector<SweepRow>& rows) {
  out << "n_it,pop,qtam,nsga2,nsga2_opt\n";
  char buf[128];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%d,%d,%.17g,%.17g,%.17g\n", r.iterations,
                  r.population, r.qtam, r.nsga2, r.nsga2_opt);
    out << buf;
  }
}

}  // namespace qtam
