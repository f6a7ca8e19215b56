#include "gsched/pso.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "gsched/rng.hpp"

namespace gsched {

void PsoParams::validate() const {
  if (swarm_size < 2) throw std::invalid_argument("pso params: swarm_size must be >= 2");
  if (max_iters < 1) throw std::invalid_argument("pso params: max_iters must be >= 1");
  if (!(c1 >= 0.0) || !(c2 >= 0.0)) {
    throw std::invalid_argument("pso params: c1 and c2 must be >= 0");
  }
  if (!(w_high >= 0.0 && w_high < 1.5) || !(w_low >= 0.0 && w_low < 1.5)) {
    throw std::invalid_argument("pso params: inertia weights must lie in [0, 1.5)");
  }
  if (w_low > w_high) {
    throw std::invalid_argument("pso params: w_low must not exceed w_high");
  }
  if (!(v_max > 0.0)) throw std::invalid_argument("pso params: v_max must be > 0");
}

RunResult schedule_pso(const Workload& workload, const PsoParams& params,
                       const FitnessParams& fparams) {
  validate_workload(workload);
  params.validate();
  fparams.validate();

  const int s = params.swarm_size;
  const int n = workload.num_tasks();
  const int m = workload.num_vms();
  const double span = static_cast<double>(m - 1);

  std::vector<std::vector<double>> x(s, std::vector<double>(n));
  std::vector<std::vector<double>> v(s, std::vector<double>(n, 0.0));
  std::vector<std::vector<double>> pbest_x(s);
  std::vector<double> fit(s);
  std::vector<double> pbest_fit(s);

  for (int i = 0; i < s; ++i) {
    for (int k = 0; k < n; ++k) {
      x[i][k] = rng::uniform(0.0, span, params.seed, rng::kInitPosition,
                             static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(k));
    }
    fit[i] = fitness(workload, decode_position(x[i], m), fparams);
    pbest_x[i] = x[i];
    pbest_fit[i] = fit[i];
  }

  int gbest = 0;
  for (int i = 1; i < s; ++i) {
    if (pbest_fit[i] < pbest_fit[gbest]) gbest = i;
  }

  RunResult result;
  result.best_assignment = decode_position(pbest_x[gbest], m);
  result.best_fitness = pbest_fit[gbest];

  auto record = [&](std::vector<double>& fits) {
    const auto [lo, hi] = std::minmax_element(fits.begin(), fits.end());
    result.history.push_back({result.best_fitness, *lo, *hi});
  };
  record(fit);

  for (int t = 1; t <= params.max_iters; ++t) {
    double w_linear = params.w_high;
    if (params.schedule == InertiaSchedule::kLinear && params.max_iters > 1) {
      w_linear = params.w_high -
                 (params.w_high - params.w_low) * (t - 1) / (params.max_iters - 1);
    }
    double mean_fit = 0.0;
    if (params.schedule == InertiaSchedule::kAdaptive) {
      for (double f : fit) mean_fit += f;
      mean_fit /= s;
    }

    // Synchronous update: the social attractor is frozen for the iteration even
    // if the gbest agent improves its own pbest mid-loop.
    const std::vector<double> gx = pbest_x[gbest];
    for (int i = 0; i < s; ++i) {
      double w = w_linear;
      if (params.schedule == InertiaSchedule::kAdaptive) {
        w = fit[i] < mean_fit ? params.w_low : params.w_high;
      }
      for (int k = 0; k < n; ++k) {
        const auto tk = static_cast<std::uint64_t>(i) * n + k;
        const double r1 = rng::u01(params.seed, rng::kPsoCognitive,
                                   static_cast<std::uint64_t>(t), tk);
        const double r2 = rng::u01(params.seed, rng::kPsoSocial,
                                   static_cast<std::uint64_t>(t), tk);
        double vel = w * v[i][k] + params.c1 * r1 * (pbest_x[i][k] - x[i][k]) +
                     params.c2 * r2 * (gx[k] - x[i][k]);
        vel = std::clamp(vel, -params.v_max, params.v_max);
        v[i][k] = vel;
        x[i][k] = std::clamp(x[i][k] + vel, 0.0, span);
      }
      fit[i] = fitness(workload, decode_position(x[i], m), fparams);
      if (fit[i] < pbest_fit[i]) {
        pbest_fit[i] = fit[i];
        pbest_x[i] = x[i];
      }
    }
    for (int i = 0; i < s; ++i) {
      if (pbest_fit[i] < pbest_fit[gbest]) gbest = i;
    }
    if (pbest_fit[gbest] < result.best_fitness) {
      result.best_fitness = pbest_fit[gbest];
      result.best_assignment = decode_position(pbest_x[gbest], m);
    }
    result.iterations_run = t;
    record(fit);
  }

  result.best_metrics = evaluate(workload, result.best_assignment, fparams);
  return result;
}

}  // namespace gsched
