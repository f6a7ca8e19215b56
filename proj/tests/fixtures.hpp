#pragma once

#include "gsched/model.hpp"
#include "gsched/workgen.hpp"

namespace gsched::test {

/// Two identical VMs (capacity 100, speed 1) and three tasks with times
/// 2, 4, 6 and resource demands 10, 20, 30. Small enough to reason about by
/// hand and to enumerate exhaustively (8 assignments).
inline Workload fixture_a() {
  return Workload{
      .tasks = {{.id = 0, .time_req = 2.0, .resource_req = 10.0},
                {.id = 1, .time_req = 4.0, .resource_req = 20.0},
                {.id = 2, .time_req = 6.0, .resource_req = 30.0}},
      .vms = {{.id = 0, .capacity = 100.0, .speed = 1.0},
              {.id = 1, .capacity = 100.0, .speed = 1.0}},
  };
}

/// Two VMs with speeds 1.0 and 0.5 (the second executes everything twice as
/// slowly) and two tasks with times 4 and 6. Exercises the speed-aware paths
/// where the fast VM is the right choice for both tasks.
inline Workload fixture_b() {
  return Workload{
      .tasks = {{.id = 0, .time_req = 4.0, .resource_req = 10.0},
                {.id = 1, .time_req = 6.0, .resource_req = 10.0}},
      .vms = {{.id = 0, .capacity = 100.0, .speed = 1.0},
              {.id = 1, .capacity = 100.0, .speed = 0.5}},
  };
}

/// Random instance from the default generator ranges.
inline Workload random_instance(int num_tasks, int num_vms, std::uint64_t seed) {
  GenSpec spec;
  spec.num_tasks = num_tasks;
  spec.num_vms = num_vms;
  spec.seed = seed;
  return generate_workload(spec);
}

}  // namespace gsched::test
