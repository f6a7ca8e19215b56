#pragma once

#include <cstdint>
#include <filesystem>
#include <utility>

#include "gsched/model.hpp"

namespace gsched {

/// Recipe for a synthetic workload: every field of every task/VM is drawn
/// independently and uniformly from its range, keyed by the seed. Defaults
/// mirror the benchmark's standard instance family: task times in [1, 100],
/// resource demands in [1, 16], VM capacities in [16, 64], homogeneous speed.
struct GenSpec {
  int num_tasks = 0;
  int num_vms = 0;
  std::pair<double, double> time_req_range{1.0, 100.0};
  std::pair<double, double> resource_req_range{1.0, 16.0};
  std::pair<double, double> capacity_range{16.0, 64.0};
  std::pair<double, double> speed_range{1.0, 1.0};
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument naming the first invalid range or count.
  void validate() const;
};

/// Deterministically generates a workload from the spec; the result always
/// passes validate_workload. Identical specs yield identical workloads.
Workload generate_workload(const GenSpec& spec);

/// Writes a workload as a JSON document with explicit `tasks` and `vms` arrays.
/// Numeric fields round-trip losslessly (shortest-round-trip serialization).
void write_workload(const Workload& workload, const std::filesystem::path& path);

/// Reads a workload written by write_workload. Parse errors and invariant
/// violations are reported with the offending section/field; the result passes
/// validate_workload.
Workload read_workload(const std::filesystem::path& path);

}  // namespace gsched
