// Command-line front end: generate workloads, schedule them with any of the
// implemented algorithms, run benchmark sweeps, or query the exhaustive oracle.
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gsched/bench.hpp"
#include "gsched/gsa.hpp"
#include "gsched/heuristics.hpp"
#include "gsched/metrics.hpp"
#include "gsched/oracle.hpp"
#include "gsched/pso.hpp"
#include "gsched/workgen.hpp"

namespace {

using nlohmann::json;

json metrics_json(const gsched::ScheduleMetrics& m) {
  return json{{"makespan", m.makespan},
              {"util_sum", m.util_sum},
              {"avg_time_util", m.avg_time_util},
              {"fitness", m.fitness}};
}

int fail(const std::string& stage, const std::exception& e) {
  std::cerr << stage << " failed: " << e.what() << '\n';
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Task-to-VM scheduling toolkit: gravitational search optimizer, "
               "classical heuristics, and a benchmark harness"};
  app.require_subcommand(1);

  // Global flags, visible to every subcommand.
  std::uint64_t seed = 0;
  std::string config_path;
  std::string out_path;
  bool desk = false;
  std::string algorithms_csv;
  app.add_option("--seed", seed, "Base random seed")->capture_default_str();
  app.add_option("--config", config_path, "JSON experiment config file");
  app.add_option("--out", out_path, "Output file (gen) or directory (bench)");
  app.add_flag("--desk", desk,
               "Use the quick benchmark preset (small sweep, minutes on one core)");
  app.add_option("--algorithms", algorithms_csv,
                 "Comma-separated algorithm list (bench)");

  // gen ----------------------------------------------------------------------
  auto* gen = app.add_subcommand("gen", "Generate a synthetic workload file");
  gen->fallthrough();
  gsched::GenSpec spec;
  gen->add_option("--tasks", spec.num_tasks, "Number of tasks")->required();
  gen->add_option("--vms", spec.num_vms, "Number of VMs")->required();
  gen->add_option("--time-range", spec.time_req_range, "Task time_req range [lo hi]");
  gen->add_option("--resource-range", spec.resource_req_range,
                  "Task resource_req range [lo hi]");
  gen->add_option("--capacity-range", spec.capacity_range, "VM capacity range [lo hi]");
  gen->add_option("--speed-range", spec.speed_range, "VM speed range [lo hi]");

  // schedule -----------------------------------------------------------------
  auto* schedule = app.add_subcommand("schedule", "Schedule a workload file and "
                                                  "print metrics plus assignment");
  schedule->fallthrough();
  std::string workload_path;
  std::string algorithm = "gsa";
  int iters = 300;
  int population = 30;
  bool olb_random = false;
  schedule->add_option("--workload", workload_path, "Workload file")->required();
  schedule->add_option("--algorithm", algorithm, "One of: gsa, pso, minmin, maxmin, "
                                                 "mct, met, olb, sufferage, ljfr-sjfr")
      ->capture_default_str();
  schedule->add_option("--iters", iters, "Optimizer iteration budget")
      ->capture_default_str();
  schedule->add_option("--population", population, "Optimizer population size")
      ->capture_default_str();
  schedule->add_flag("--olb-random", olb_random, "OLB picks VMs at random instead of "
                                                 "least-ready");

  // oracle -------------------------------------------------------------------
  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum of a tiny workload");
  oracle->fallthrough();
  std::string oracle_workload;
  std::uint64_t budget = gsched::kDefaultOracleBudget;
  int workers = 1;
  oracle->add_option("--workload", oracle_workload, "Workload file")->required();
  oracle->add_option("--budget", budget, "Max m^n the oracle will enumerate")
      ->capture_default_str();
  oracle->add_option("--workers", workers, "Worker threads")->capture_default_str();

  // bench --------------------------------------------------------------------
  auto* bench = app.add_subcommand("bench", "Run an experiment sweep and emit CSV "
                                            "and plot-data files");
  bench->fallthrough();

  CLI11_PARSE(app, argc, argv);

  if (gen->parsed()) {
    try {
      spec.seed = seed;
      const gsched::Workload w = gsched::generate_workload(spec);
      const std::string path = out_path.empty() ? "workload.json" : out_path;
      gsched::write_workload(w, path);
      std::cout << "wrote " << path << " (" << w.num_tasks() << " tasks, "
                << w.num_vms() << " VMs)\n";
    } catch (const std::exception& e) {
      return fail("gen", e);
    }
    return 0;
  }

  if (schedule->parsed()) {
    try {
      const gsched::Workload w = gsched::read_workload(workload_path);
      const gsched::FitnessParams fparams = gsched::FitnessParams::defaults_for(w);
      json doc;
      doc["algorithm"] = algorithm;
      gsched::Assignment a;
      if (algorithm == "gsa") {
        gsched::GsaParams p;
        p.population_size = population;
        p.max_iters = iters;
        p.seed = seed;
        const gsched::GsaRunResult r = gsched::run_gsa(w, p, fparams);
        a = r.best_assignment;
        doc["iterations_run"] = r.iterations_run;
      } else if (algorithm == "pso") {
        gsched::PsoParams p;
        p.swarm_size = population;
        p.max_iters = iters;
        p.seed = seed;
        const gsched::RunResult r = gsched::schedule_pso(w, p, fparams);
        a = r.best_assignment;
        doc["iterations_run"] = r.iterations_run;
      } else if (algorithm == "olb") {
        a = gsched::schedule_olb(
            w, olb_random ? gsched::OlbMode::kRandom : gsched::OlbMode::kLeastReady,
            seed);
      } else if (algorithm == "met") {
        a = gsched::schedule_met(w);
      } else if (algorithm == "mct") {
        a = gsched::schedule_mct(w);
      } else if (algorithm == "minmin") {
        a = gsched::schedule_min_min(w);
      } else if (algorithm == "maxmin") {
        a = gsched::schedule_max_min(w);
      } else if (algorithm == "sufferage") {
        a = gsched::schedule_sufferage(w);
      } else if (algorithm == "ljfr-sjfr") {
        a = gsched::schedule_ljfr_sjfr(w);
      } else {
        throw std::invalid_argument("unknown algorithm '" + algorithm + "'");
      }
      doc["metrics"] = metrics_json(gsched::evaluate(w, a, fparams));
      doc["assignment"] = a;
      std::cout << doc.dump(2) << '\n';
    } catch (const std::exception& e) {
      return fail("schedule", e);
    }
    return 0;
  }

  if (oracle->parsed()) {
    try {
      const gsched::Workload w = gsched::read_workload(oracle_workload);
      const gsched::FitnessParams fparams = gsched::FitnessParams::defaults_for(w);
      const gsched::OracleResult r =
          gsched::brute_force_optimum(w, fparams, budget, workers);
      json doc;
      doc["best_assignment"] = r.best_assignment;
      doc["best_fitness"] = r.best_fitness;
      doc["best_makespan"] = r.best_makespan;
      doc["enumerated_count"] = r.enumerated_count;
      std::cout << doc.dump(2) << '\n';
    } catch (const std::exception& e) {
      return fail("oracle", e);
    }
    return 0;
  }

  // bench
  try {
    gsched::ExperimentConfig config;
    if (!config_path.empty()) {
      config = gsched::load_config(config_path, desk);
    } else if (desk) {
      config = gsched::desk_preset();
    }
    if (app.count("--seed") > 0) config.seeds = {seed};
    if (!out_path.empty()) config.out_dir = out_path;
    if (!algorithms_csv.empty()) {
      config.algorithms.clear();
      std::string rest = algorithms_csv;
      while (!rest.empty()) {
        const std::size_t comma = rest.find(',');
        config.algorithms.push_back(rest.substr(0, comma));
        rest = comma == std::string::npos ? "" : rest.substr(comma + 1);
      }
    }
    const std::vector<gsched::ResultRow> rows = gsched::run_experiment(config);
    const gsched::Summary summary = gsched::summarize(rows);
    gsched::emit_outputs(rows, summary, config.out_dir);
    std::cout << rows.size() << " runs -> " << config.out_dir << "/results.csv\n";
    for (const gsched::GainRow& g : summary.gains) {
      std::cout << "gsa vs " << g.baseline << ": makespan " << g.makespan_gain_pct
                << "% better, avg_time_util " << g.avg_time_util_gain_pct
                << "% higher\n";
    }
  } catch (const std::exception& e) {
    return fail("bench", e);
  }
  return 0;
}
