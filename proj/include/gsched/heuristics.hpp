#pragma once

#include <cstdint>
#include <vector>

#include "gsched/model.hpp"

namespace gsched {

/// Per-VM accumulated finish time; entry i is the time VM i becomes free given
/// the assignments made so far.
using ReadyTimes = std::vector<double>;

/// How OLB picks a VM for each task (always without execution-time lookahead).
enum class OlbMode {
  kLeastReady,  ///< next available VM: smallest current ready time
  kRandom,      ///< uniformly random VM, the load-oblivious variant
};

/// Opportunistic load balancing: tasks in input order, each to the next
/// available VM (kLeastReady, the default) or to a uniformly random VM
/// (kRandom). Only kRandom consumes the seed. Ties: lowest VM index.
Assignment schedule_olb(const Workload& workload, OlbMode mode = OlbMode::kLeastReady,
                        std::uint64_t seed = 0);

/// Minimum execution time: each task independently to the VM with the smallest
/// time_req / speed, ignoring load entirely. With equal speeds every task lands
/// on VM 0 — the textbook load-imbalance failure mode, kept on purpose.
Assignment schedule_met(const Workload& workload);

/// Minimum completion time: tasks in input order, each to the VM minimizing
/// ready time + execution time.
Assignment schedule_mct(const Workload& workload);

/// Min-Min: repeatedly pick the unassigned task whose best completion time is
/// smallest and commit it to that VM (short tasks first, batch-recomputed).
Assignment schedule_min_min(const Workload& workload);

/// Max-Min: like Min-Min but commits the task whose best completion time is
/// largest (long tasks first).
Assignment schedule_max_min(const Workload& workload);

/// Sufferage: repeatedly commit the task that would suffer most from losing its
/// best VM (largest second-best minus best completion time); sufferage is 0
/// when there is a single VM.
Assignment schedule_sufferage(const Workload& workload);

/// LJFR-SJFR: alternates one Max-Min selection step (longest job) with one
/// Min-Min selection step (shortest job), starting with the Max-Min step.
Assignment schedule_ljfr_sjfr(const Workload& workload);

/// Execution time of task j on VM i (time_req / speed).
double execution_time(const Workload& workload, int task, int vm);

}  // namespace gsched
