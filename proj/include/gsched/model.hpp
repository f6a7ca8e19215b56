#pragma once

#include <span>
#include <vector>

namespace gsched {

/// One independent task: an execution-time demand and a resource demand.
struct Task {
  int id = 0;
  double time_req = 0.0;      ///< execution time units on a speed-1.0 VM
  double resource_req = 0.0;  ///< resource units consumed while placed on a VM

  bool operator==(const Task&) const = default;
};

/// One virtual machine. `speed` scales execution time (time_req / speed); the
/// homogeneous default of 1.0 keeps all VMs identical in time behaviour.
struct Vm {
  int id = 0;
  double capacity = 0.0;  ///< resource units available on this VM
  double speed = 1.0;     ///< dimensionless rate multiplier

  bool operator==(const Vm&) const = default;
};

/// An immutable scheduling instance: n tasks to place on m VMs.
struct Workload {
  std::vector<Task> tasks;
  std::vector<Vm> vms;

  int num_tasks() const { return static_cast<int>(tasks.size()); }
  int num_vms() const { return static_cast<int>(vms.size()); }

  bool operator==(const Workload&) const = default;
};

/// Total map task index -> VM index; entry j is the VM executing task j.
using Assignment = std::vector<int>;

/// Checks every model invariant (positive demands/capacities/speeds, non-empty
/// lists, ids forming 0..n-1) and returns the workload unchanged.
/// Throws std::invalid_argument naming the first violated field and its index.
const Workload& validate_workload(const Workload& workload);

/// Maps a continuous agent position to an Assignment: each coordinate is rounded
/// half away from zero, then clamped into [0, m-1]. Total for any finite input.
Assignment decode_position(std::span<const double> position, int num_vms);

}  // namespace gsched
