#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "gsched/gsa.hpp"
#include "gsched/heuristics.hpp"
#include "gsched/metrics.hpp"
#include "gsched/model.hpp"
#include "gsched/pso.hpp"
#include "gsched/workgen.hpp"

namespace gsched {

/// Which axis the experiment sweeps.
enum class SweepMode {
  kSweepTasks,  ///< vary task count, VMs fixed to the first vm_counts entry
  kSweepVms,    ///< vary VM count, tasks fixed to the last task_counts entry
};

/// Per-workload fitness constants for a sweep. Explicit values win; otherwise
/// gamma = gamma_scale / total time_req and delta = delta_scale / m, so the
/// constants track the instance size the way the library defaults do.
struct FitnessOverrides {
  std::optional<double> gamma;
  std::optional<double> delta;
  std::optional<double> eps1;
  std::optional<double> eps2;
  double gamma_scale = 1.0;
  double delta_scale = 1.0;

  FitnessParams resolve(const Workload& workload) const;
};

/// Full description of one experiment sweep.
struct ExperimentConfig {
  std::vector<int> task_counts = {1000, 5000, 10000, 20000, 50000};
  std::vector<int> vm_counts = {16, 64, 256, 1024};
  SweepMode mode = SweepMode::kSweepTasks;
  /// Any subset of: gsa, pso, minmin, maxmin, mct, met, olb, sufferage, ljfr-sjfr.
  std::vector<std::string> algorithms = {"gsa",    "pso", "minmin",    "maxmin", "mct",
                                         "met",    "olb", "sufferage", "ljfr-sjfr"};
  std::vector<std::uint64_t> seeds = {0};
  GsaParams gsa;                 ///< seed field is re-derived per run
  PsoParams pso;                 ///< seed field is re-derived per run
  FitnessOverrides fitness;
  GenSpec workload;              ///< ranges only; counts and seed set per grid point
  OlbMode olb_mode = OlbMode::kLeastReady;
  std::string out_dir = "bench_out";
  bool record_wall_time = true;  ///< false writes wall_time_ms as 0 (reproducible CSV)
  int workers = 1;               ///< worker threads inside each optimizer run

  /// Throws std::invalid_argument on empty grids/algorithms/seeds or unknown
  /// algorithm names.
  void validate() const;
};

/// One benchmark measurement: algorithm x grid point x workload seed.
struct ResultRow {
  std::string algorithm;
  int num_tasks = 0;
  int num_vms = 0;
  std::uint64_t seed = 0;
  ScheduleMetrics metrics;
  double wall_time_ms = 0.0;
  std::string status = "ok";  ///< failures carry the error text; kept out of the CSV

  bool operator==(const ResultRow&) const = default;
};

/// Per-(algorithm, grid point) aggregation over seeds.
struct GridPointStat {
  std::string algorithm;
  int num_tasks = 0;
  int num_vms = 0;
  int seeds = 0;
  double makespan_mean = 0.0, makespan_std = 0.0;
  double util_sum_mean = 0.0, util_sum_std = 0.0;
  double avg_time_util_mean = 0.0, avg_time_util_std = 0.0;
  double fitness_mean = 0.0, fitness_std = 0.0;
};

/// Average percentage gain of GSA over one baseline across grid points:
/// makespan gain (baseline - gsa) / baseline and avg_time_util gain
/// (gsa - baseline) / baseline, each averaged over grid points of seed means.
struct GainRow {
  std::string baseline;
  double makespan_gain_pct = 0.0;
  double avg_time_util_gain_pct = 0.0;
};

struct Summary {
  std::vector<GridPointStat> stats;  ///< sorted by (algorithm, num_tasks, num_vms)
  std::vector<GainRow> gains;        ///< empty when GSA is not among the rows
};

/// Runs the whole sweep: per grid point and seed one generated workload shared
/// by every algorithm (paired comparison), one row per run. Per-run failures
/// land in the row's status; the sweep continues. Rows come back sorted by
/// (algorithm, num_tasks, num_vms, seed).
std::vector<ResultRow> run_experiment(const ExperimentConfig& config);

/// Seed-mean/std per grid point and GSA-vs-baseline gains.
Summary summarize(const std::vector<ResultRow>& rows);

/// Writes results.csv, summary.csv, gains.csv and the four per-figure plot-data
/// files (one row per grid point, one column per algorithm, seed means) into
/// outdir. Rows with a non-ok status are excluded from every file.
void emit_outputs(const std::vector<ResultRow>& rows, const Summary& summary,
                  const std::filesystem::path& outdir);

/// Parses a results.csv produced by emit_outputs (used by round-trip checks).
std::vector<ResultRow> read_results_csv(const std::filesystem::path& path);

/// The quick configuration: task_counts [200, 500, 1000, 2000], vm_counts
/// [8, 16, 32], seeds 0..9, optimizers at 150 iterations with the benchmark
/// GSA setting (heuristic-seeded init, improve-only acceptance, exponential
/// G schedule), OLB in random mode, makespan-dominant fitness constants.
/// Finishes in minutes on one core; full-scale runs use explicit configs.
ExperimentConfig desk_preset();

/// Loads an ExperimentConfig from a JSON file whose keys mirror the field
/// names; absent fields keep their defaults (start from desk_preset() when
/// `desk` is true).
ExperimentConfig load_config(const std::filesystem::path& path, bool desk = false);

/// Canonical algorithm order used everywhere outputs are emitted.
const std::vector<std::string>& known_algorithms();

}  // namespace gsched
