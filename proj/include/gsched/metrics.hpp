#pragma once

#include "gsched/model.hpp"

namespace gsched {

/// Weights of the combined objective
///   f(a) = (gamma * makespan(a) + eps1) / (delta * util_sum(a) + eps2),
/// minimized by the optimizers: smaller makespan and larger utilization-sum both
/// lower f. The constants trade the two terms off against each other.
struct FitnessParams {
  double gamma = 1.0;  ///< weight on makespan (> 0)
  double delta = 1.0;  ///< weight on resource utilization sum (> 0)
  double eps1 = 1.0;   ///< additive numerator constant (>= 0)
  double eps2 = 1.0;   ///< additive denominator constant (> 0)

  /// Instance-scaled defaults: gamma = 1 / total time_req (numerator near [0,1]
  /// for balanced schedules), delta = 1 / m, eps1 = eps2 = 1.
  static FitnessParams defaults_for(const Workload& workload);

  /// Throws std::invalid_argument if any constant is out of range.
  void validate() const;
};

/// Everything the benchmark records about one schedule.
struct ScheduleMetrics {
  double makespan = 0.0;       ///< max over VMs of summed execution time
  double util_sum = 0.0;       ///< sum over VMs of resource demand / capacity
  double avg_time_util = 0.0;  ///< mean busy fraction, in (0, 1]
  double fitness = 0.0;        ///< combined objective, lower is better

  bool operator==(const ScheduleMetrics&) const = default;
};

/// Max over VMs i of sum_{tasks j on i} time_req_j / speed_i.
double makespan(const Workload& workload, const Assignment& assignment);

/// Sum over VMs i of (sum of resource_req on i) / capacity_i. Deliberately
/// uncapped: packing a VM past its capacity raises (not saturates) the term.
double resource_util_sum(const Workload& workload, const Assignment& assignment);

/// (sum of per-VM busy time) / (m * makespan): the bounded, reportable
/// utilization in (0, 1]. 1.0 means every VM is busy for the whole makespan.
double avg_time_utilization(const Workload& workload, const Assignment& assignment);

/// Combined objective; see FitnessParams. Lower is better.
double fitness(const Workload& workload, const Assignment& assignment,
               const FitnessParams& params);

/// All four metrics in one pass.
ScheduleMetrics evaluate(const Workload& workload, const Assignment& assignment,
                         const FitnessParams& params);

}  // namespace gsched
