#pragma once

#include <cstdint>
#include <utility>

#include "gsched/metrics.hpp"
#include "gsched/model.hpp"

namespace gsched {

/// Exhaustive-search ground truth for one instance.
struct OracleResult {
  Assignment best_assignment;        ///< lexicographically smallest argmin
  double best_fitness = 0.0;
  double best_makespan = 0.0;        ///< makespan of best_assignment
  std::uint64_t enumerated_count = 0;  ///< always m^n
};

/// Hard ceiling on m^n below which exhaustive enumeration is allowed.
inline constexpr std::uint64_t kDefaultOracleBudget = 10'000'000;

/// Enumerates every one of the m^n assignments (mixed-radix counting over task
/// indices, task 0 most significant) and returns the fitness argmin; ties keep
/// the lexicographically smallest assignment. `workers` partitions the space by
/// the leading digit; any worker count returns the identical result.
/// Throws std::invalid_argument naming m^n when it exceeds the budget.
OracleResult brute_force_optimum(const Workload& workload, const FitnessParams& fparams,
                                 std::uint64_t budget = kDefaultOracleBudget,
                                 int workers = 1);

/// Same enumeration with makespan as the objective; returns the assignment and
/// its makespan.
std::pair<Assignment, double> brute_force_min_makespan(
    const Workload& workload, std::uint64_t budget = kDefaultOracleBudget,
    int workers = 1);

}  // namespace gsched
