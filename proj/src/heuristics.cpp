#include "gsched/heuristics.hpp"

#include <limits>

#include "gsched/rng.hpp"

namespace gsched {

double execution_time(const Workload& workload, int task, int vm) {
  return workload.tasks[task].time_req / workload.vms[vm].speed;
}

namespace {

/// VM minimizing ready + execution time for one task; ties -> lowest VM index.
/// Returns {vm, completion time}.
std::pair<int, double> best_completion(const Workload& w, const ReadyTimes& ready,
                                       int task) {
  int best_vm = 0;
  double best_ct = ready[0] + execution_time(w, task, 0);
  for (int i = 1; i < w.num_vms(); ++i) {
    const double ct = ready[i] + execution_time(w, task, i);
    if (ct < best_ct) {
      best_ct = ct;
      best_vm = i;
    }
  }
  return {best_vm, best_ct};
}

/// One Min-Min (want_max = false) or Max-Min (want_max = true) selection step:
/// among unassigned tasks, pick the one whose best completion time is extremal
/// (ties -> lowest task index), commit it, update ready times.
void batch_select_step(const Workload& w, std::vector<bool>& assigned,
                       ReadyTimes& ready, Assignment& out, bool want_max) {
  int pick_task = -1;
  int pick_vm = 0;
  double pick_ct = 0.0;
  for (int j = 0; j < w.num_tasks(); ++j) {
    if (assigned[j]) continue;
    const auto [vm, ct] = best_completion(w, ready, j);
    if (pick_task < 0 || (want_max ? ct > pick_ct : ct < pick_ct)) {
      pick_task = j;
      pick_vm = vm;
      pick_ct = ct;
    }
  }
  assigned[pick_task] = true;
  out[pick_task] = pick_vm;
  ready[pick_vm] = pick_ct;
}

}  // namespace

Assignment schedule_olb(const Workload& workload, OlbMode mode, std::uint64_t seed) {
  const int n = workload.num_tasks();
  const int m = workload.num_vms();
  Assignment out(n);
  ReadyTimes ready(m, 0.0);
  for (int j = 0; j < n; ++j) {
    int vm = 0;
    if (mode == OlbMode::kRandom) {
      vm = rng::uniform_index(m, seed, rng::kOlbRandom, static_cast<std::uint64_t>(j));
    } else {
      for (int i = 1; i < m; ++i) {
        if (ready[i] < ready[vm]) vm = i;
      }
    }
    out[j] = vm;
    ready[vm] += execution_time(workload, j, vm);
  }
  return out;
}

Assignment schedule_met(const Workload& workload) {
  const int n = workload.num_tasks();
  const int m = workload.num_vms();
  // Fastest VM is task-independent under the time_req / speed model.
  int fastest = 0;
  for (int i = 1; i < m; ++i) {
    if (workload.vms[i].speed > workload.vms[fastest].speed) fastest = i;
  }
  return Assignment(n, fastest);
}

Assignment schedule_mct(const Workload& workload) {
  const int n = workload.num_tasks();
  Assignment out(n);
  ReadyTimes ready(workload.num_vms(), 0.0);
  for (int j = 0; j < n; ++j) {
    const auto [vm, ct] = best_completion(workload, ready, j);
    out[j] = vm;
    ready[vm] = ct;
  }
  return out;
}

Assignment schedule_min_min(const Workload& workload) {
  const int n = workload.num_tasks();
  Assignment out(n);
  std::vector<bool> assigned(n, false);
  ReadyTimes ready(workload.num_vms(), 0.0);
  for (int round = 0; round < n; ++round) {
    batch_select_step(workload, assigned, ready, out, /*want_max=*/false);
  }
  return out;
}

Assignment schedule_max_min(const Workload& workload) {
  const int n = workload.num_tasks();
  Assignment out(n);
  std::vector<bool> assigned(n, false);
  ReadyTimes ready(workload.num_vms(), 0.0);
  for (int round = 0; round < n; ++round) {
    batch_select_step(workload, assigned, ready, out, /*want_max=*/true);
  }
  return out;
}

Assignment schedule_sufferage(const Workload& workload) {
  const int n = workload.num_tasks();
  const int m = workload.num_vms();
  Assignment out(n);
  std::vector<bool> assigned(n, false);
  ReadyTimes ready(m, 0.0);
  for (int round = 0; round < n; ++round) {
    int pick_task = -1;
    int pick_vm = 0;
    double pick_ct = 0.0;
    double pick_suff = -1.0;
    for (int j = 0; j < n; ++j) {
      if (assigned[j]) continue;
      int best_vm = 0;
      double best_ct = ready[0] + execution_time(workload, j, 0);
      double second_ct = std::numeric_limits<double>::infinity();
      for (int i = 1; i < m; ++i) {
        const double ct = ready[i] + execution_time(workload, j, i);
        if (ct < best_ct) {
          second_ct = best_ct;
          best_ct = ct;
          best_vm = i;
        } else if (ct < second_ct) {
          second_ct = ct;
        }
      }
      const double suff = m == 1 ? 0.0 : second_ct - best_ct;
      if (suff > pick_suff) {  // strict: ties keep the lowest task index
        pick_suff = suff;
        pick_task = j;
        pick_vm = best_vm;
        pick_ct = best_ct;
      }
    }
    assigned[pick_task] = true;
    out[pick_task] = pick_vm;
    ready[pick_vm] = pick_ct;
  }
  return out;
}

Assignment schedule_ljfr_sjfr(const Workload& workload) {
  const int n = workload.num_tasks();
  Assignment out(n);
  std::vector<bool> assigned(n, false);
  ReadyTimes ready(workload.num_vms(), 0.0);
  for (int round = 0; round < n; ++round) {
    const bool long_job_round = round % 2 == 0;  // LJFR first
    batch_select_step(workload, assigned, ready, out, /*want_max=*/long_job_round);
  }
  return out;
}

}  // namespace gsched
