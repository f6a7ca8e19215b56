#include "gsched/gsa.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "gsched/heuristics.hpp"
#include "gsched/rng.hpp"

namespace gsched {

void GsaParams::validate() const {
  if (population_size < 2) {
    throw std::invalid_argument("gsa params: population_size must be >= 2");
  }
  if (!(g0 > 0.0)) throw std::invalid_argument("gsa params: g0 must be > 0");
  if (!(mass_eps > 0.0)) throw std::invalid_argument("gsa params: mass_eps must be > 0");
  if (!(r_eps > 0.0)) throw std::invalid_argument("gsa params: r_eps must be > 0");
  if (max_iters < 1) throw std::invalid_argument("gsa params: max_iters must be >= 1");
  if (stagnation_window < 0) {
    throw std::invalid_argument("gsa params: stagnation_window must be >= 0");
  }
  if (!(v_max > 0.0)) throw std::invalid_argument("gsa params: v_max must be > 0");
}

namespace {

/// Runs `fn(i)` for i in [0, count), split over `workers` threads. The work per
/// index must be independent; partitioning never changes results.
void parallel_for(int count, int workers, const std::function<void(int)>& fn) {
  if (workers <= 1 || count <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  const int used = std::min(workers, count);
  std::vector<std::thread> pool;
  pool.reserve(used);
  for (int w = 0; w < used; ++w) {
    pool.emplace_back([&, w] {
      for (int i = w; i < count; i += used) fn(i);
    });
  }
  for (std::thread& th : pool) th.join();
}

std::vector<Assignment> heuristic_seeds(const Workload& w) {
  return {
      schedule_olb(w),     schedule_met(w),       schedule_mct(w),
      schedule_min_min(w), schedule_max_min(w),   schedule_sufferage(w),
      schedule_ljfr_sjfr(w),
  };
}

}  // namespace

std::vector<Agent> init_population(const Workload& workload, const GsaParams& params,
                                   const FitnessParams& fparams) {
  const int s = params.population_size;
  const int n = workload.num_tasks();
  const int m = workload.num_vms();
  const double span = static_cast<double>(m - 1);

  std::vector<Agent> agents(s);
  int first_uniform = 0;
  if (params.init == GsaInit::kHeuristicSeeded) {
    const std::vector<Assignment> seeds = heuristic_seeds(workload);
    const int count = std::min<int>(s, static_cast<int>(seeds.size()));
    for (int i = 0; i < count; ++i) {
      agents[i].position.assign(seeds[i].begin(), seeds[i].end());
    }
    first_uniform = count;
  }
  for (int i = first_uniform; i < s; ++i) {
    agents[i].position.resize(n);
    for (int k = 0; k < n; ++k) {
      agents[i].position[k] =
          rng::uniform(0.0, span, params.seed, rng::kInitPosition,
                       static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(k));
    }
  }
  for (Agent& a : agents) {
    a.velocity.assign(n, 0.0);
    a.fitness = fitness(workload, decode_position(a.position, m), fparams);
  }
  return agents;
}

double gravitational_constant(int t, const GsaParams& params) {
  if (params.g_schedule == GSchedule::kExponential) {
    return params.g0 * std::exp(params.phi * static_cast<double>(t) / params.max_iters);
  }
  return params.g0 * std::pow(static_cast<double>(t) / params.effective_alpha(),
                              params.phi);
}

std::vector<double> compute_masses(std::span<const double> fitnesses, double mass_eps) {
  const std::size_t s = fitnesses.size();
  const auto [best_it, worst_it] = std::minmax_element(fitnesses.begin(), fitnesses.end());
  const double best = *best_it;    // minimization: best is the smallest fitness
  const double worst = *worst_it;
  std::vector<double> masses(s);
  if (best == worst) {
    std::fill(masses.begin(), masses.end(), 1.0 / static_cast<double>(s));
    return masses;
  }
  double sum = 0.0;
  for (std::size_t i = 0; i < s; ++i) {
    masses[i] = (fitnesses[i] - worst) / (best - worst) + mass_eps;
    sum += masses[i];
  }
  for (double& m : masses) m /= sum;
  return masses;
}

std::vector<std::vector<double>> total_forces(const std::vector<Agent>& agents,
                                              double g, double r_eps,
                                              const PairRand& pair_rand) {
  const int s = static_cast<int>(agents.size());
  const int n = static_cast<int>(agents.front().position.size());

  // Euclidean distances, symmetric.
  std::vector<std::vector<double>> dist(s, std::vector<double>(s, 0.0));
  for (int i = 0; i < s; ++i) {
    for (int j = i + 1; j < s; ++j) {
      double sq = 0.0;
      for (int k = 0; k < n; ++k) {
        const double d = agents[i].position[k] - agents[j].position[k];
        sq += d * d;
      }
      dist[i][j] = dist[j][i] = std::sqrt(sq);
    }
  }

  std::vector<std::vector<double>> forces(s, std::vector<double>(n, 0.0));
  for (int i = 0; i < s; ++i) {
    for (int j = 0; j < s; ++j) {
      if (j == i) continue;
      const double w = pair_rand(i, j) * g * agents[i].mass * agents[j].mass /
                       (dist[i][j] + r_eps);
      for (int k = 0; k < n; ++k) {
        forces[i][k] += w * (agents[j].position[k] - agents[i].position[k]);
      }
    }
  }
  return forces;
}

void step(std::vector<Agent>& agents, int t, const GsaParams& params,
          const Workload& workload, const FitnessParams& fparams, int workers) {
  const int s = static_cast<int>(agents.size());
  const int n = workload.num_tasks();
  const int m = workload.num_vms();
  const double span = static_cast<double>(m - 1);

  std::vector<double> fits(s);
  for (int i = 0; i < s; ++i) fits[i] = agents[i].fitness;
  const std::vector<double> masses = compute_masses(fits, params.mass_eps);
  for (int i = 0; i < s; ++i) agents[i].mass = masses[i];

  const double g = gravitational_constant(t, params);
  const auto tu = static_cast<std::uint64_t>(t);
  const auto pair_rand = [&](int i, int j) {
    return rng::u01(params.seed, rng::kPairForce, tu,
                    static_cast<std::uint64_t>(i) * s + j);
  };
  const std::vector<std::vector<double>> forces =
      total_forces(agents, g, params.r_eps, pair_rand);

  parallel_for(s, workers, [&](int i) {
    Agent& a = agents[i];
    const double inv_inertia = 1.0 / (a.mass + params.mass_eps);
    std::vector<double> moved(n);
    for (int k = 0; k < n; ++k) {
      const double accel = forces[i][k] * inv_inertia;
      const double r = rng::u01(params.seed, rng::kVelocity, tu,
                                static_cast<std::uint64_t>(i) * n + k);
      double vel = r * a.velocity[k] + accel;
      vel = std::clamp(vel, -params.v_max, params.v_max);
      a.velocity[k] = vel;
      moved[k] = std::clamp(a.position[k] + vel, 0.0, span);
    }
    const double moved_fit = fitness(workload, decode_position(moved, m), fparams);
    if (params.acceptance == MoveAcceptance::kAlways || moved_fit <= a.fitness) {
      a.position = std::move(moved);
      a.fitness = moved_fit;
    }
    // kImproveOnly keeps position and fitness on a worsening move; the velocity
    // update above stands either way.
  });
}

GsaRunResult run_gsa(const Workload& workload, const GsaParams& params,
                     const FitnessParams& fparams, int workers) {
  validate_workload(workload);
  params.validate();
  fparams.validate();

  const int m = workload.num_vms();
  std::vector<Agent> agents = init_population(workload, params, fparams);

  GsaRunResult result;
  int best_agent = 0;
  for (int i = 1; i < params.population_size; ++i) {
    if (agents[i].fitness < agents[best_agent].fitness) best_agent = i;
  }
  result.best_fitness = agents[best_agent].fitness;
  result.best_assignment = decode_position(agents[best_agent].position, m);

  auto record = [&] {
    double lo = agents[0].fitness, hi = agents[0].fitness;
    for (const Agent& a : agents) {
      lo = std::min(lo, a.fitness);
      hi = std::max(hi, a.fitness);
    }
    result.history.push_back({result.best_fitness, lo, hi});
  };
  record();

  int since_improvement = 0;
  for (int t = 1; t <= params.max_iters; ++t) {
    step(agents, t, params, workload, fparams, workers);

    bool improved = false;
    for (const Agent& a : agents) {
      if (a.fitness < result.best_fitness) {
        result.best_fitness = a.fitness;
        result.best_assignment = decode_position(a.position, m);
        improved = true;
      }
    }
    result.iterations_run = t;
    record();

    since_improvement = improved ? 0 : since_improvement + 1;
    if (params.stagnation_window > 0 && since_improvement >= params.stagnation_window) {
      break;
    }
  }

  result.best_metrics = evaluate(workload, result.best_assignment, fparams);
  return result;
}

}  // namespace gsched
