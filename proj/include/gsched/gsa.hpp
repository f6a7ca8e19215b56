#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "gsched/metrics.hpp"
#include "gsched/model.hpp"
#include "gsched/run_result.hpp"

namespace gsched {

/// Decay law for the gravitational constant G(t).
enum class GSchedule {
  kPower,        ///< G(t) = g0 * (t / alpha)^phi
  kExponential,  ///< G(t) = g0 * exp(phi * t / max_iters)
};

/// Initial population layout.
enum class GsaInit {
  kUniform,          ///< every coordinate uniform in [0, m-1]
  kHeuristicSeeded,  ///< first agents carry the constructive-heuristic schedules
};

/// Position-update selection rule.
enum class MoveAcceptance {
  kAlways,       ///< x <- x + v unconditionally (pure gravitational kinematics)
  kImproveOnly,  ///< revert a move whose decoded fitness worsens (greedy filter)
};

/// Gravitational search configuration. An agent is a continuous point in
/// [0, m-1]^n; better (lower) fitness means larger mass means stronger pull on
/// the rest of the population.
struct GsaParams {
  int population_size = 30;  ///< S_A, must be >= 2
  double g0 = 100.0;         ///< initial gravitational constant
  double alpha = 0.0;        ///< power-schedule time scale; <= 0 means use max_iters
  double phi = -0.2;         ///< schedule exponent (negative: G decays over time)
  double mass_eps = 1e-6;    ///< additive constant in the raw mass formula
  double r_eps = 1e-9;       ///< additive constant guarding R_ij = 0
  int max_iters = 300;       ///< iteration budget T
  int stagnation_window = 0; ///< early stop after this many non-improving
                             ///< iterations; 0 disables
  double v_max = 1.0;        ///< per-dimension velocity clamp
  std::uint64_t seed = 0;
  GSchedule g_schedule = GSchedule::kPower;
  GsaInit init = GsaInit::kUniform;
  MoveAcceptance acceptance = MoveAcceptance::kAlways;

  /// Effective power-schedule time scale (alpha, or max_iters when alpha <= 0).
  double effective_alpha() const { return alpha > 0.0 ? alpha : max_iters; }

  /// Throws std::invalid_argument on out-of-range values.
  void validate() const;
};

/// One candidate solution: position/velocity vectors of length n plus the
/// fitness of the decoded assignment and the current normalized mass. A single
/// mass serves as passive, active, and inertial mass alike.
struct Agent {
  std::vector<double> position;
  std::vector<double> velocity;
  double fitness = 0.0;
  double mass = 0.0;
};

/// Result alias: GSA and PSO runs share the same result shape.
using GsaRunResult = RunResult;

/// Random weight applied to the force agent j exerts on agent i; the optimizer
/// supplies a seeded stream, tests may inject constants.
using PairRand = std::function<double(int i, int j)>;

/// Builds the initial population: positions per the init mode, velocities zero,
/// fitness evaluated on the decoded assignment, masses unset (computed per
/// iteration). Heuristic seeding places the OLB/MET/MCT/Min-Min/Max-Min/
/// Sufferage/LJFR-SJFR schedules in the first agents (as many as fit) and draws
/// the remainder uniformly.
std::vector<Agent> init_population(const Workload& workload, const GsaParams& params,
                                   const FitnessParams& fparams);

/// G(t) for iteration t >= 1 under the configured schedule.
double gravitational_constant(int t, const GsaParams& params);

/// Fitness-to-mass mapping for a minimization population:
///   raw_i = (fit_i - worst) / (best - worst) + mass_eps,   best = min, worst = max
///   M_i   = raw_i / sum_j raw_j
/// All-equal fitnesses degenerate to M_i = 1 / S_A. The result sums to 1.
std::vector<double> compute_masses(std::span<const double> fitnesses, double mass_eps);

/// Total force on every agent:
///   F_i^k = sum_{j != i} pair_rand(i, j) * g * (M_i * M_j / (R_ij + r_eps))
///           * (x_j^k - x_i^k)
/// with R_ij the Euclidean distance between agents i and j. Agents must carry
/// this iteration's masses.
std::vector<std::vector<double>> total_forces(const std::vector<Agent>& agents,
                                              double g, double r_eps,
                                              const PairRand& pair_rand);

/// One iteration t: masses from current fitnesses, forces under G(t),
/// acceleration a = F / (M_i + mass_eps), velocity v <- rand * v + a (uniform
/// rand per agent per dimension) clamped to [-v_max, v_max], position moved and
/// clamped to [0, m-1] subject to the acceptance rule, fitness re-evaluated.
/// `workers` only partitions the work; results are identical for any value.
void step(std::vector<Agent>& agents, int t, const GsaParams& params,
          const Workload& workload, const FitnessParams& fparams, int workers = 1);

/// Full run: init, then step for t = 1..max_iters (stopping early once the
/// global best has not improved for stagnation_window consecutive iterations,
/// when enabled), tracking the best decoded assignment ever evaluated.
/// Deterministic for a fixed seed, bit-identical for any worker count.
GsaRunResult run_gsa(const Workload& workload, const GsaParams& params,
                     const FitnessParams& fparams, int workers = 1);

}  // namespace gsched
