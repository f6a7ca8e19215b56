#include <doctest.h>

#include <stdexcept>

#include "fixtures.hpp"
#include "gsched/metrics.hpp"
#include "gsched/oracle.hpp"
#include "gsched/pso.hpp"

using namespace gsched;

TEST_CASE("PSO parameter validation") {
  PsoParams p;
  CHECK_NOTHROW(p.validate());

  p.swarm_size = 0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);

  p = PsoParams{};
  p.c1 = -0.1;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);

  p = PsoParams{};
  p.w_high = 1.5;  // inertia must stay below 1.5
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);

  p = PsoParams{};
  p.v_max = 0.0;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);

  p = PsoParams{};
  p.w_low = 0.9;
  p.w_high = 0.4;  // schedule must not increase inertia
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("PSO finds the exhaustive optimum on the small fixture") {
  const Workload w = test::fixture_a();
  const FitnessParams fp = FitnessParams::defaults_for(w);
  const OracleResult oracle = brute_force_optimum(w, fp);

  PsoParams p;
  p.swarm_size = 20;
  p.max_iters = 200;
  p.seed = 3;
  const RunResult r = schedule_pso(w, p, fp);
  CHECK(r.best_fitness == doctest::Approx(oracle.best_fitness));
  CHECK(r.best_metrics.makespan == doctest::Approx(oracle.best_makespan));
}

TEST_CASE("PSO is deterministic for a fixed seed") {
  const Workload w = test::random_instance(30, 4, 5);
  const FitnessParams fp = FitnessParams::defaults_for(w);
  PsoParams p;
  p.max_iters = 40;
  p.seed = 77;
  const RunResult a = schedule_pso(w, p, fp);
  const RunResult b = schedule_pso(w, p, fp);
  CHECK(a == b);

  p.seed = 78;
  const RunResult c = schedule_pso(w, p, fp);
  CHECK(a.best_fitness != c.best_fitness);
}

TEST_CASE("zero coefficients freeze the swarm at its initial best") {
  const Workload w = test::random_instance(20, 3, 9);
  const FitnessParams fp = FitnessParams::defaults_for(w);
  PsoParams p;
  p.schedule = InertiaSchedule::kConstant;
  p.w_high = 0.0;
  p.w_low = 0.0;
  p.c1 = 0.0;
  p.c2 = 0.0;
  p.max_iters = 25;
  const RunResult r = schedule_pso(w, p, fp);
  REQUIRE(!r.history.empty());
  // Nothing moves, so the best never improves past the initial population.
  CHECK(r.best_fitness == doctest::Approx(r.history.front().best_so_far));
  for (const IterationRecord& rec : r.history) {
    CHECK(rec.best_so_far == doctest::Approx(r.history.front().best_so_far));
  }
}

TEST_CASE("PSO best-so-far history never increases") {
  const Workload w = test::random_instance(40, 5, 13);
  const FitnessParams fp = FitnessParams::defaults_for(w);
  PsoParams p;
  p.max_iters = 60;
  p.seed = 1;
  for (const InertiaSchedule sched :
       {InertiaSchedule::kConstant, InertiaSchedule::kLinear,
        InertiaSchedule::kAdaptive}) {
    p.schedule = sched;
    const RunResult r = schedule_pso(w, p, fp);
    REQUIRE(r.history.size() == static_cast<std::size_t>(p.max_iters) + 1);
    for (std::size_t t = 1; t < r.history.size(); ++t) {
      CHECK(r.history[t].best_so_far <= r.history[t - 1].best_so_far);
    }
    CHECK(r.best_fitness == doctest::Approx(r.history.back().best_so_far));
  }
}
