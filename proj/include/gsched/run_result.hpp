#pragma once

#include <vector>

#include "gsched/metrics.hpp"
#include "gsched/model.hpp"

namespace gsched {

/// One line of optimizer convergence history.
struct IterationRecord {
  double best_so_far = 0.0;  ///< global best fitness up to and including this point
  double pop_best = 0.0;     ///< best fitness in the current population
  double pop_worst = 0.0;    ///< worst fitness in the current population

  bool operator==(const IterationRecord&) const = default;
};

/// What a population-based optimizer run returns: the historical-best schedule
/// (best-so-far elitism, never the final population's best) plus convergence
/// history. history[0] describes the initial population; one entry follows per
/// executed iteration, so history.size() == iterations_run + 1 and the
/// best_so_far series is non-increasing.
struct RunResult {
  Assignment best_assignment;
  double best_fitness = 0.0;
  ScheduleMetrics best_metrics;
  std::vector<IterationRecord> history;
  int iterations_run = 0;

  bool operator==(const RunResult&) const = default;
};

}  // namespace gsched
