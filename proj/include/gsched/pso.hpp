#pragma once

#include <cstdint>

#include "gsched/metrics.hpp"
#include "gsched/model.hpp"
#include "gsched/run_result.hpp"

namespace gsched {

/// Inertia weight schedule for PSO.
enum class InertiaSchedule {
  kConstant,  ///< w = w_high for every iteration
  kLinear,    ///< w decays linearly from w_high to w_low over the run
  kAdaptive,  ///< per agent: better than the population mean -> w_low, else w_high
};

/// Global-best PSO configuration. Defaults are the standard textbook setting:
/// inertia 0.9 -> 0.4, c1 = c2 = 2.
struct PsoParams {
  int swarm_size = 30;
  int max_iters = 300;
  InertiaSchedule schedule = InertiaSchedule::kLinear;
  double w_high = 0.9;  ///< constant w, linear start, or adaptive worse-half w
  double w_low = 0.4;   ///< linear end or adaptive better-half w
  double c1 = 2.0;      ///< cognitive (personal-best) coefficient
  double c2 = 2.0;      ///< social (global-best) coefficient
  double v_max = 4.0;   ///< per-dimension velocity clamp
  std::uint64_t seed = 0;

  /// Throws std::invalid_argument on out-of-range values. Zero coefficients are
  /// allowed (they freeze part of the dynamics, which is occasionally useful in
  /// tests); negative ones are not.
  void validate() const;
};

/// Schedules by global-best PSO over the same continuous encoding the GSA uses:
/// positions decode through decode_position, fitness through metrics. Velocity
/// update v <- w*v + c1*r1*(pbest - x) + c2*r2*(gbest - x) with r1, r2 uniform
/// per agent per dimension; v clamped to [-v_max, v_max], x to [0, m-1].
/// Returns the historical best (elitism) with convergence history.
RunResult schedule_pso(const Workload& workload, const PsoParams& params,
                       const FitnessParams& fparams);

}  // namespace gsched
