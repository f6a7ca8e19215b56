#include "gsched/oracle.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace gsched {

namespace {

/// m^n with overflow saturation (anything past the budget only needs ordering).
std::uint64_t pow_saturating(std::uint64_t base, int exp) {
  std::uint64_t result = 1;
  for (int i = 0; i < exp; ++i) {
    if (result > UINT64_MAX / base) return UINT64_MAX;
    result *= base;
  }
  return result;
}

struct Candidate {
  double value = 0.0;
  Assignment assignment;

  /// Ordering: smaller objective first; ties -> lexicographically smaller
  /// assignment. Works across workers because the objective of a given
  /// assignment is computed by the identical code path everywhere.
  bool beats(const Candidate& other) const {
    if (assignment.empty()) return false;
    if (other.assignment.empty()) return true;
    if (value != other.value) return value < other.value;
    return assignment < other.assignment;
  }
};

/// Walks every assignment with the given leading digits (task 0's VM), in
/// lexicographic order, calling eval on each; keeps the best candidate.
/// The odometer increments the last task first, so the overall visit order is
/// ascending lexicographic and the first strict improvement wins ties.
Candidate enumerate_digits(const Workload& w, const std::vector<int>& leading,
                           const std::function<double(const Assignment&)>& eval) {
  const int n = w.num_tasks();
  const int m = w.num_vms();
  Candidate best;
  Assignment a(n, 0);
  for (int d : leading) {
    std::fill(a.begin(), a.end(), 0);
    a[0] = d;
    while (true) {
      const double value = eval(a);
      if (best.assignment.empty() || value < best.value ||
          (value == best.value && a < best.assignment)) {
        best.value = value;
        best.assignment = a;
      }
      int k = n - 1;
      while (k >= 1 && a[k] == m - 1) {
        a[k] = 0;
        --k;
      }
      if (k < 1) break;  // task 0 stays fixed within this block
      ++a[k];
    }
  }
  return best;
}

/// Budget guard + leading-digit partition + merge, shared by both oracles.
Candidate search(const Workload& workload, std::uint64_t budget, int workers,
                 const std::function<double(const Assignment&)>& eval) {
  validate_workload(workload);
  const int n = workload.num_tasks();
  const int m = workload.num_vms();
  const std::uint64_t count = pow_saturating(static_cast<std::uint64_t>(m), n);
  if (count > budget) {
    throw std::invalid_argument("oracle: m^n = " +
                                (count == UINT64_MAX ? std::string("overflow")
                                                     : std::to_string(count)) +
                                " exceeds budget " + std::to_string(budget));
  }

  const int used = std::clamp(workers, 1, m);
  std::vector<std::vector<int>> digit_sets(used);
  for (int d = 0; d < m; ++d) digit_sets[d % used].push_back(d);

  std::vector<Candidate> found(used);
  if (used == 1) {
    found[0] = enumerate_digits(workload, digit_sets[0], eval);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(used);
    for (int wrk = 0; wrk < used; ++wrk) {
      pool.emplace_back([&, wrk] {
        found[wrk] = enumerate_digits(workload, digit_sets[wrk], eval);
      });
    }
    for (std::thread& th : pool) th.join();
  }

  Candidate best;
  for (Candidate& c : found) {
    if (c.beats(best)) best = std::move(c);
  }
  return best;
}

/// Makespan + util_sum in one preallocated pass (hot loop of the enumeration).
/// Each thread keeps its own instance (thread_local) and rebinds per workload.
struct Evaluator {
  const Workload* w = nullptr;
  std::vector<double> busy;
  std::vector<double> demand;

  void bind(const Workload& workload) {
    w = &workload;
    if (busy.size() != workload.vms.size()) {
      busy.assign(workload.vms.size(), 0.0);
      demand.assign(workload.vms.size(), 0.0);
    }
  }

  std::pair<double, double> operator()(const Assignment& a) {
    std::fill(busy.begin(), busy.end(), 0.0);
    std::fill(demand.begin(), demand.end(), 0.0);
    for (std::size_t j = 0; j < a.size(); ++j) {
      busy[a[j]] += w->tasks[j].time_req / w->vms[a[j]].speed;
      demand[a[j]] += w->tasks[j].resource_req;
    }
    double mk = 0.0;
    double us = 0.0;
    for (std::size_t i = 0; i < busy.size(); ++i) {
      mk = std::max(mk, busy[i]);
      us += demand[i] / w->vms[i].capacity;
    }
    return {mk, us};
  }
};

}  // namespace

OracleResult brute_force_optimum(const Workload& workload, const FitnessParams& fparams,
                                 std::uint64_t budget, int workers) {
  fparams.validate();
  const Candidate best = search(workload, budget, workers, [&](const Assignment& a) {
    thread_local Evaluator ev;
    ev.bind(workload);
    const auto [mk, us] = ev(a);
    return (fparams.gamma * mk + fparams.eps1) / (fparams.delta * us + fparams.eps2);
  });
  OracleResult result;
  result.best_assignment = best.assignment;
  result.best_fitness = best.value;
  result.best_makespan = makespan(workload, best.assignment);
  result.enumerated_count =
      pow_saturating(static_cast<std::uint64_t>(workload.num_vms()), workload.num_tasks());
  return result;
}

std::pair<Assignment, double> brute_force_min_makespan(const Workload& workload,
                                                       std::uint64_t budget,
                                                       int workers) {
  const Candidate best = search(workload, budget, workers, [&](const Assignment& a) {
    thread_local Evaluator ev;
    ev.bind(workload);
    return ev(a).first;
  });
  return {best.assignment, best.value};
}

}  // namespace gsched
