#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "gsched/bench.hpp"

using namespace gsched;

namespace {

/// Self-cleaning scratch directory for emitted benchmark files.
struct TempDir {
  std::filesystem::path path;
  explicit TempDir(const std::string& name)
      : path(std::filesystem::temp_directory_path() / name) {
    std::filesystem::remove_all(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int line_count(const std::string& text) {
  return static_cast<int>(std::count(text.begin(), text.end(), '\n'));
}

ExperimentConfig tiny_config() {
  ExperimentConfig c;
  c.task_counts = {4, 6};
  c.vm_counts = {2};
  c.algorithms = {"olb", "mct", "minmin"};
  c.seeds = {0, 1};
  c.record_wall_time = false;
  return c;
}

ResultRow make_row(const std::string& alg, int n, int m, std::uint64_t seed,
                   double mk, double atu) {
  ResultRow r;
  r.algorithm = alg;
  r.num_tasks = n;
  r.num_vms = m;
  r.seed = seed;
  r.metrics = {.makespan = mk, .util_sum = 1.0, .avg_time_util = atu,
               .fitness = mk};
  return r;
}

}  // namespace

TEST_CASE("config validation rejects empty or unknown entries") {
  ExperimentConfig c = tiny_config();
  CHECK_NOTHROW(c.validate());

  c.algorithms = {"olb", "simulated-annealing"};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);

  c = tiny_config();
  c.seeds.clear();
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);

  c = tiny_config();
  c.task_counts = {0};
  CHECK_THROWS_AS(c.validate(), std::invalid_argument);
}

TEST_CASE("a sweep emits one row per algorithm, grid point, and seed") {
  const std::vector<ResultRow> rows = run_experiment(tiny_config());
  REQUIRE(rows.size() == 12);  // 2 task counts x 3 algorithms x 2 seeds
  for (const ResultRow& r : rows) {
    CHECK(r.status == "ok");
    CHECK(r.num_vms == 2);
    CHECK(r.wall_time_ms == 0.0);
    CHECK(r.metrics.makespan > 0.0);
  }
  const bool sorted = std::is_sorted(
      rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
        return std::tie(a.algorithm, a.num_tasks, a.num_vms, a.seed) <
               std::tie(b.algorithm, b.num_tasks, b.num_vms, b.seed);
      });
  CHECK(sorted);
}

TEST_CASE("the generated workload is shared by every algorithm") {
  // A run with extra algorithms must not disturb the rows of existing ones.
  ExperimentConfig narrow = tiny_config();
  narrow.algorithms = {"minmin"};
  ExperimentConfig wide = tiny_config();
  wide.algorithms = {"minmin", "maxmin", "met"};

  const std::vector<ResultRow> a = run_experiment(narrow);
  std::vector<ResultRow> b = run_experiment(wide);
  b.erase(std::remove_if(b.begin(), b.end(),
                         [](const ResultRow& r) { return r.algorithm != "minmin"; }),
          b.end());
  CHECK(a == b);
}

TEST_CASE("per-run failures land in the status and stay out of the CSV") {
  ExperimentConfig c = tiny_config();
  c.algorithms = {"gsa"};
  c.task_counts = {4};
  c.seeds = {0};
  c.gsa.population_size = 1;  // invalid: rejected by the optimizer
  const std::vector<ResultRow> rows = run_experiment(c);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].status != "ok");

  const TempDir tmp("gsched_bench_fail");
  emit_outputs(rows, summarize(rows), tmp.path);
  CHECK(line_count(slurp(tmp.path / "results.csv")) == 1);  // header only
}

TEST_CASE("summarize aggregates means and sample deviations per grid point") {
  const std::vector<ResultRow> rows = {
      make_row("minmin", 10, 2, 0, 10.0, 0.8),
      make_row("minmin", 10, 2, 1, 14.0, 0.6),
      make_row("minmin", 20, 2, 0, 30.0, 0.9),
  };
  const Summary s = summarize(rows);
  REQUIRE(s.stats.size() == 2);
  CHECK(s.stats[0].num_tasks == 10);
  CHECK(s.stats[0].seeds == 2);
  CHECK(s.stats[0].makespan_mean == doctest::Approx(12.0));
  CHECK(s.stats[0].makespan_std == doctest::Approx(std::sqrt(8.0)));
  CHECK(s.stats[0].avg_time_util_mean == doctest::Approx(0.7));
  CHECK(s.stats[1].num_tasks == 20);
  CHECK(s.stats[1].seeds == 1);
  CHECK(s.stats[1].makespan_std == 0.0);
  CHECK(s.gains.empty());  // no gsa rows
}

TEST_CASE("gains compare per-point seed means against the gsa rows") {
  const std::vector<ResultRow> rows = {
      make_row("gsa", 10, 2, 0, 90.0, 0.9),
      make_row("olb", 10, 2, 0, 120.0, 0.6),
  };
  const Summary s = summarize(rows);
  REQUIRE(s.gains.size() == 1);
  CHECK(s.gains[0].baseline == "olb");
  CHECK(s.gains[0].makespan_gain_pct == doctest::Approx(25.0));
  CHECK(s.gains[0].avg_time_util_gain_pct == doctest::Approx(50.0));
}

TEST_CASE("identical gsa and baseline rows give zero gain") {
  const std::vector<ResultRow> rows = {
      make_row("gsa", 10, 2, 0, 55.0, 0.8),
      make_row("sufferage", 10, 2, 0, 55.0, 0.8),
  };
  const Summary s = summarize(rows);
  REQUIRE(s.gains.size() == 1);
  CHECK(s.gains[0].makespan_gain_pct == doctest::Approx(0.0));
  CHECK(s.gains[0].avg_time_util_gain_pct == doctest::Approx(0.0));
}

TEST_CASE("re-running a configuration reproduces every output byte") {
  const ExperimentConfig c = tiny_config();
  const TempDir first("gsched_bench_a");
  const TempDir second("gsched_bench_b");

  const std::vector<ResultRow> rows_a = run_experiment(c);
  emit_outputs(rows_a, summarize(rows_a), first.path);
  const std::vector<ResultRow> rows_b = run_experiment(c);
  emit_outputs(rows_b, summarize(rows_b), second.path);

  CHECK(rows_a == rows_b);
  for (const char* name :
       {"results.csv", "summary.csv", "gains.csv", "fig_makespan_vs_tasks.dat",
        "fig_util_vs_tasks.dat", "fig_makespan_vs_vms.dat", "fig_util_vs_vms.dat"}) {
    CHECK(slurp(first.path / name) == slurp(second.path / name));
  }
}

TEST_CASE("results.csv round-trips through the reader") {
  const ExperimentConfig c = tiny_config();
  const TempDir tmp("gsched_bench_rt");
  const std::vector<ResultRow> rows = run_experiment(c);
  emit_outputs(rows, summarize(rows), tmp.path);
  const std::vector<ResultRow> back = read_results_csv(tmp.path / "results.csv");
  CHECK(back == rows);
}

TEST_CASE("plot data files carry one row per grid point") {
  ExperimentConfig c = tiny_config();
  c.task_counts = {4, 6, 8, 10};
  const TempDir tmp("gsched_bench_dat");
  const std::vector<ResultRow> rows = run_experiment(c);
  emit_outputs(rows, summarize(rows), tmp.path);

  const std::string dat = slurp(tmp.path / "fig_makespan_vs_tasks.dat");
  REQUIRE(line_count(dat) == 5);  // header + 4 grid points
  std::istringstream lines(dat);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "# num_tasks mct minmin olb");
  int expected_x = 4;
  while (std::getline(lines, line)) {
    std::istringstream fields(line);
    int x = 0;
    double v = 0.0;
    fields >> x;
    CHECK(x == expected_x);
    int cols = 0;
    while (fields >> v) {
      CHECK(v > 0.0);
      ++cols;
    }
    CHECK(cols == 3);
    expected_x += 2;
  }
}

TEST_CASE("emitting no rows still produces all headers") {
  const TempDir tmp("gsched_bench_empty");
  emit_outputs({}, summarize({}), tmp.path);
  CHECK(line_count(slurp(tmp.path / "results.csv")) == 1);
  CHECK(line_count(slurp(tmp.path / "summary.csv")) == 1);
  CHECK(line_count(slurp(tmp.path / "gains.csv")) == 1);
  CHECK(line_count(slurp(tmp.path / "fig_util_vs_vms.dat")) == 1);
}

TEST_CASE("mean makespan does not shrink as task counts grow") {
  ExperimentConfig c;
  c.task_counts = {50, 100, 200};
  c.vm_counts = {4};
  c.algorithms = {"minmin", "olb"};
  c.seeds = {0, 1};
  c.record_wall_time = false;
  const Summary s = summarize(run_experiment(c));

  std::map<std::string, std::vector<double>> by_alg;
  for (const GridPointStat& st : s.stats) {
    by_alg[st.algorithm].push_back(st.makespan_mean);  // stats sorted by n
  }
  for (const auto& [alg, means] : by_alg) {
    REQUIRE(means.size() == 3);
    CHECK(std::is_sorted(means.begin(), means.end()));
  }
}

TEST_CASE("fitness overrides resolve against each workload") {
  const Workload w = test::fixture_a();  // total time 12, two VMs

  FitnessOverrides o;
  FitnessParams p = o.resolve(w);
  CHECK(p.gamma == doctest::Approx(1.0 / 12.0));
  CHECK(p.delta == doctest::Approx(0.5));

  o.delta_scale = 1e-3;
  p = o.resolve(w);
  CHECK(p.delta == doctest::Approx(0.5e-3));

  o.gamma = 2.0;
  o.eps2 = 3.0;
  p = o.resolve(w);
  CHECK(p.gamma == 2.0);
  CHECK(p.eps2 == 3.0);
  CHECK(p.eps1 == 1.0);
}

TEST_CASE("the quick preset is a small seeded sweep") {
  const ExperimentConfig c = desk_preset();
  CHECK(c.task_counts == std::vector<int>{200, 500, 1000, 2000});
  CHECK(c.vm_counts == std::vector<int>{8, 16, 32});
  CHECK(c.seeds.size() == 10);
  CHECK(c.gsa.max_iters == 150);
  CHECK(c.gsa.init == GsaInit::kHeuristicSeeded);
  CHECK(c.gsa.acceptance == MoveAcceptance::kImproveOnly);
  CHECK(c.gsa.g_schedule == GSchedule::kExponential);
  CHECK(c.pso.max_iters == 150);
  CHECK(c.olb_mode == OlbMode::kRandom);
  CHECK(c.fitness.delta_scale == doctest::Approx(1e-6));
  CHECK_NOTHROW(c.validate());
}

TEST_CASE("configs load from JSON with defaults for absent fields") {
  const TempDir tmp("gsched_bench_cfg");
  std::filesystem::create_directories(tmp.path);
  const std::filesystem::path cfg = tmp.path / "config.json";
  std::ofstream(cfg) << R"({
    "task_counts": [3, 5],
    "vm_counts": [2],
    "mode": "sweep-vms",
    "algorithms": ["minmin"],
    "seeds": [4, 5],
    "record_wall_time": false,
    "olb_mode": "random",
    "out_dir": "elsewhere",
    "gsa": {"max_iters": 25, "g_schedule": "exponential",
            "init": "heuristic-seeded", "acceptance": "improve-only"},
    "pso": {"schedule": "adaptive", "c1": 1.5},
    "fitness": {"delta_scale": 0.001},
    "workload": {"speed_range": [0.5, 2.0]}
  })";

  const ExperimentConfig c = load_config(cfg);
  CHECK(c.task_counts == std::vector<int>{3, 5});
  CHECK(c.mode == SweepMode::kSweepVms);
  CHECK(c.algorithms == std::vector<std::string>{"minmin"});
  CHECK(c.seeds == std::vector<std::uint64_t>{4, 5});
  CHECK(c.record_wall_time == false);
  CHECK(c.olb_mode == OlbMode::kRandom);
  CHECK(c.out_dir == "elsewhere");
  CHECK(c.gsa.max_iters == 25);
  CHECK(c.gsa.g_schedule == GSchedule::kExponential);
  CHECK(c.gsa.init == GsaInit::kHeuristicSeeded);
  CHECK(c.gsa.acceptance == MoveAcceptance::kImproveOnly);
  CHECK(c.pso.schedule == InertiaSchedule::kAdaptive);
  CHECK(c.pso.c1 == 1.5);
  CHECK(c.pso.swarm_size == 30);  // untouched default
  CHECK(c.fitness.delta_scale == doctest::Approx(0.001));
  CHECK(c.workload.speed_range == std::pair<double, double>{0.5, 2.0});

  // Desk flag: absent fields come from the quick preset instead.
  const std::filesystem::path cfg2 = tmp.path / "override.json";
  std::ofstream(cfg2) << R"({"vm_counts": [16]})";
  const ExperimentConfig d = load_config(cfg2, /*desk=*/true);
  CHECK(d.vm_counts == std::vector<int>{16});
  CHECK(d.task_counts == std::vector<int>{200, 500, 1000, 2000});
  CHECK(d.gsa.init == GsaInit::kHeuristicSeeded);

  const std::filesystem::path bad = tmp.path / "bad.json";
  std::ofstream(bad) << R"({"mode": "diagonal"})";
  CHECK_THROWS_WITH_AS(load_config(bad), doctest::Contains("unknown mode"),
                       std::runtime_error);
}
