#include "gsched/metrics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace gsched {

FitnessParams FitnessParams::defaults_for(const Workload& workload) {
  double total_time = 0.0;
  for (const Task& t : workload.tasks) total_time += t.time_req;
  return FitnessParams{
      .gamma = 1.0 / total_time,
      .delta = 1.0 / static_cast<double>(workload.num_vms()),
      .eps1 = 1.0,
      .eps2 = 1.0,
  };
}

void FitnessParams::validate() const {
  if (!(gamma > 0.0)) throw std::invalid_argument("fitness params: gamma must be > 0");
  if (!(delta > 0.0)) throw std::invalid_argument("fitness params: delta must be > 0");
  if (!(eps1 >= 0.0)) throw std::invalid_argument("fitness params: eps1 must be >= 0");
  if (!(eps2 > 0.0)) throw std::invalid_argument("fitness params: eps2 must be > 0");
}

namespace {

/// Per-VM busy time (execution time accumulated on each VM).
std::vector<double> busy_times(const Workload& w, const Assignment& a) {
  std::vector<double> busy(w.vms.size(), 0.0);
  for (std::size_t j = 0; j < a.size(); ++j) {
    busy[a[j]] += w.tasks[j].time_req / w.vms[a[j]].speed;
  }
  return busy;
}

}  // namespace

double makespan(const Workload& workload, const Assignment& assignment) {
  const std::vector<double> busy = busy_times(workload, assignment);
  return *std::max_element(busy.begin(), busy.end());
}

double resource_util_sum(const Workload& workload, const Assignment& assignment) {
  std::vector<double> demand(workload.vms.size(), 0.0);
  for (std::size_t j = 0; j < assignment.size(); ++j) {
    demand[assignment[j]] += workload.tasks[j].resource_req;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < demand.size(); ++i) {
    sum += demand[i] / workload.vms[i].capacity;
  }
  return sum;
}

double avg_time_utilization(const Workload& workload, const Assignment& assignment) {
  const std::vector<double> busy = busy_times(workload, assignment);
  const double total = std::accumulate(busy.begin(), busy.end(), 0.0);
  const double span = *std::max_element(busy.begin(), busy.end());
  return total / (static_cast<double>(busy.size()) * span);
}

double fitness(const Workload& workload, const Assignment& assignment,
               const FitnessParams& params) {
  return (params.gamma * makespan(workload, assignment) + params.eps1) /
         (params.delta * resource_util_sum(workload, assignment) + params.eps2);
}

ScheduleMetrics evaluate(const Workload& workload, const Assignment& assignment,
                         const FitnessParams& params) {
  ScheduleMetrics m;
  m.makespan = makespan(workload, assignment);
  m.util_sum = resource_util_sum(workload, assignment);
  m.avg_time_util = avg_time_utilization(workload, assignment);
  m.fitness = (params.gamma * m.makespan + params.eps1) /
              (params.delta * m.util_sum + params.eps2);
  return m;
}

}  // namespace gsched
