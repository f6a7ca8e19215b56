#include "gsched/model.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace gsched {

const Workload& validate_workload(const Workload& workload) {
  if (workload.tasks.empty()) {
    throw std::invalid_argument("workload: empty task list");
  }
  if (workload.vms.empty()) {
    throw std::invalid_argument("workload: empty VM list");
  }
  for (std::size_t i = 0; i < workload.tasks.size(); ++i) {
    const Task& t = workload.tasks[i];
    if (t.id != static_cast<int>(i)) {
      throw std::invalid_argument("task " + std::to_string(i) + ": id " +
                                  std::to_string(t.id) + " breaks the 0..n-1 numbering");
    }
    if (!(t.time_req > 0.0)) {
      throw std::invalid_argument("task " + std::to_string(i) + ": time_req must be > 0");
    }
    if (!(t.resource_req > 0.0)) {
      throw std::invalid_argument("task " + std::to_string(i) +
                                  ": resource_req must be > 0");
    }
  }
  for (std::size_t i = 0; i < workload.vms.size(); ++i) {
    const Vm& v = workload.vms[i];
    if (v.id != static_cast<int>(i)) {
      throw std::invalid_argument("vm " + std::to_string(i) + ": id " +
                                  std::to_string(v.id) + " breaks the 0..m-1 numbering");
    }
    if (!(v.capacity > 0.0)) {
      throw std::invalid_argument("vm " + std::to_string(i) + ": capacity must be > 0");
    }
    if (!(v.speed > 0.0)) {
      throw std::invalid_argument("vm " + std::to_string(i) + ": speed must be > 0");
    }
  }
  return workload;
}

Assignment decode_position(std::span<const double> position, int num_vms) {
  Assignment out(position.size());
  const long long hi = num_vms - 1;
  for (std::size_t k = 0; k < position.size(); ++k) {
    long long vm = std::llround(position[k]);  // rounds half away from zero
    if (vm < 0) vm = 0;
    if (vm > hi) vm = hi;
    out[k] = static_cast<int>(vm);
  }
  return out;
}

}  // namespace gsched
