#include "gsched/bench.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <chrono>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gsched/rng.hpp"

namespace gsched {

namespace {

constexpr std::string_view kResultsHeader =
    "algorithm,num_tasks,num_vms,seed,makespan,util_sum,avg_time_util,fitness,"
    "wall_time_ms";

/// Shortest round-trip decimal form (what from_chars reads back exactly).
std::string fmt(double value) {
  std::array<char, 32> buf{};
  const auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
  return std::string(buf.data(), end);
}

double parse_double(std::string_view text, const char* what) {
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::runtime_error(std::string("results csv: bad ") + what + " value '" +
                             std::string(text) + "'");
  }
  return value;
}

std::uint64_t parse_u64(std::string_view text, const char* what) {
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw std::runtime_error(std::string("results csv: bad ") + what + " value '" +
                             std::string(text) + "'");
  }
  return value;
}

int algorithm_id(const std::string& name) {
  const auto& names = known_algorithms();
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) {
    throw std::invalid_argument("unknown algorithm '" + name + "'");
  }
  return static_cast<int>(it - names.begin());
}

/// Runs one algorithm on one workload; optimizer seeds derive from the workload
/// seed and the algorithm identity, so re-running any subset reproduces rows.
ScheduleMetrics run_algorithm(const std::string& name, const Workload& w,
                              const ExperimentConfig& config,
                              const FitnessParams& fparams,
                              std::uint64_t workload_seed) {
  const std::uint64_t run_seed =
      rng::key(workload_seed, rng::kOptimizerSeed, algorithm_id(name));
  if (name == "gsa") {
    GsaParams p = config.gsa;
    p.seed = run_seed;
    return run_gsa(w, p, fparams, config.workers).best_metrics;
  }
  if (name == "pso") {
    PsoParams p = config.pso;
    p.seed = run_seed;
    return schedule_pso(w, p, fparams).best_metrics;
  }
  Assignment a;
  if (name == "olb") {
    a = schedule_olb(w, config.olb_mode, run_seed);
  } else if (name == "met") {
    a = schedule_met(w);
  } else if (name == "mct") {
    a = schedule_mct(w);
  } else if (name == "minmin") {
    a = schedule_min_min(w);
  } else if (name == "maxmin") {
    a = schedule_max_min(w);
  } else if (name == "sufferage") {
    a = schedule_sufferage(w);
  } else if (name == "ljfr-sjfr") {
    a = schedule_ljfr_sjfr(w);
  } else {
    throw std::invalid_argument("unknown algorithm '" + name + "'");
  }
  return evaluate(w, a, fparams);
}

std::vector<std::pair<int, int>> grid_points(const ExperimentConfig& c) {
  std::vector<std::pair<int, int>> points;
  if (c.mode == SweepMode::kSweepTasks) {
    for (int n : c.task_counts) points.emplace_back(n, c.vm_counts.front());
  } else {
    for (int m : c.vm_counts) points.emplace_back(c.task_counts.back(), m);
  }
  return points;
}

struct Welford {
  int count = 0;
  double mean = 0.0;
  double m2 = 0.0;

  void add(double x) {
    ++count;
    const double d = x - mean;
    mean += d / count;
    m2 += d * (x - mean);
  }
  double stddev() const { return count < 2 ? 0.0 : std::sqrt(m2 / (count - 1)); }
};

}  // namespace

const std::vector<std::string>& known_algorithms() {
  static const std::vector<std::string> names = {
      "gsa", "ljfr-sjfr", "maxmin", "mct", "met", "minmin", "olb", "pso", "sufferage"};
  return names;
}

FitnessParams FitnessOverrides::resolve(const Workload& workload) const {
  const FitnessParams base = FitnessParams::defaults_for(workload);
  FitnessParams out;
  out.gamma = gamma.value_or(gamma_scale * base.gamma);
  out.delta = delta.value_or(delta_scale * base.delta);
  out.eps1 = eps1.value_or(base.eps1);
  out.eps2 = eps2.value_or(base.eps2);
  out.validate();
  return out;
}

void ExperimentConfig::validate() const {
  if (task_counts.empty()) throw std::invalid_argument("config: task_counts is empty");
  if (vm_counts.empty()) throw std::invalid_argument("config: vm_counts is empty");
  if (algorithms.empty()) throw std::invalid_argument("config: algorithms is empty");
  if (seeds.empty()) throw std::invalid_argument("config: seeds is empty");
  for (const std::string& a : algorithms) algorithm_id(a);
  for (int n : task_counts) {
    if (n < 1) throw std::invalid_argument("config: task counts must be >= 1");
  }
  for (int m : vm_counts) {
    if (m < 1) throw std::invalid_argument("config: vm counts must be >= 1");
  }
  if (workers < 1) throw std::invalid_argument("config: workers must be >= 1");
}

std::vector<ResultRow> run_experiment(const ExperimentConfig& config) {
  config.validate();
  std::vector<ResultRow> rows;
  for (const auto& [n, m] : grid_points(config)) {
    for (std::uint64_t seed : config.seeds) {
      const std::uint64_t workload_seed =
          rng::key(seed, rng::kWorkloadSeed, static_cast<std::uint64_t>(n),
                   static_cast<std::uint64_t>(m));
      GenSpec spec = config.workload;
      spec.num_tasks = n;
      spec.num_vms = m;
      spec.seed = workload_seed;
      const Workload w = generate_workload(spec);
      const FitnessParams fparams = config.fitness.resolve(w);

      for (const std::string& name : config.algorithms) {
        ResultRow row;
        row.algorithm = name;
        row.num_tasks = n;
        row.num_vms = m;
        row.seed = seed;
        const auto t0 = std::chrono::steady_clock::now();
        try {
          row.metrics = run_algorithm(name, w, config, fparams, workload_seed);
        } catch (const std::exception& e) {
          row.status = e.what();
        }
        const auto t1 = std::chrono::steady_clock::now();
        if (config.record_wall_time) {
          row.wall_time_ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
        }
        rows.push_back(std::move(row));
      }
    }
  }
  std::sort(rows.begin(), rows.end(), [](const ResultRow& a, const ResultRow& b) {
    return std::tie(a.algorithm, a.num_tasks, a.num_vms, a.seed) <
           std::tie(b.algorithm, b.num_tasks, b.num_vms, b.seed);
  });
  return rows;
}

Summary summarize(const std::vector<ResultRow>& rows) {
  struct Acc {
    Welford makespan, util_sum, avg_time_util, fitness;
  };
  std::map<std::tuple<std::string, int, int>, Acc> groups;
  for (const ResultRow& r : rows) {
    if (r.status != "ok") continue;
    Acc& acc = groups[{r.algorithm, r.num_tasks, r.num_vms}];
    acc.makespan.add(r.metrics.makespan);
    acc.util_sum.add(r.metrics.util_sum);
    acc.avg_time_util.add(r.metrics.avg_time_util);
    acc.fitness.add(r.metrics.fitness);
  }

  Summary summary;
  for (const auto& [key, acc] : groups) {
    GridPointStat s;
    std::tie(s.algorithm, s.num_tasks, s.num_vms) = key;
    s.seeds = acc.makespan.count;
    s.makespan_mean = acc.makespan.mean;
    s.makespan_std = acc.makespan.stddev();
    s.util_sum_mean = acc.util_sum.mean;
    s.util_sum_std = acc.util_sum.stddev();
    s.avg_time_util_mean = acc.avg_time_util.mean;
    s.avg_time_util_std = acc.avg_time_util.stddev();
    s.fitness_mean = acc.fitness.mean;
    s.fitness_std = acc.fitness.stddev();
    summary.stats.push_back(std::move(s));
  }

  // GSA-vs-baseline gains, averaged over the grid points both algorithms covered.
  std::map<std::pair<int, int>, const GridPointStat*> gsa_points;
  for (const GridPointStat& s : summary.stats) {
    if (s.algorithm == "gsa") gsa_points[{s.num_tasks, s.num_vms}] = &s;
  }
  if (!gsa_points.empty()) {
    std::map<std::string, std::pair<Welford, Welford>> per_baseline;
    for (const GridPointStat& s : summary.stats) {
      if (s.algorithm == "gsa") continue;
      const auto it = gsa_points.find({s.num_tasks, s.num_vms});
      if (it == gsa_points.end()) continue;
      const GridPointStat& g = *it->second;
      auto& [mk_gain, util_gain] = per_baseline[s.algorithm];
      mk_gain.add((s.makespan_mean - g.makespan_mean) / s.makespan_mean * 100.0);
      util_gain.add((g.avg_time_util_mean - s.avg_time_util_mean) /
                    s.avg_time_util_mean * 100.0);
    }
    for (const std::string& name : known_algorithms()) {
      const auto it = per_baseline.find(name);
      if (it == per_baseline.end()) continue;
      summary.gains.push_back(
          {name, it->second.first.mean, it->second.second.mean});
    }
  }
  return summary;
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
  out << content;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

/// One plot-data file: `# x alg1 alg2 ...` then a row per grid point.
std::string plot_data(const std::vector<GridPointStat>& stats,
                      const std::vector<std::string>& algs, bool x_is_tasks,
                      bool value_is_makespan) {
  std::map<std::pair<int, int>, std::map<std::string, double>> by_point;
  for (const GridPointStat& s : stats) {
    by_point[{s.num_tasks, s.num_vms}][s.algorithm] =
        value_is_makespan ? s.makespan_mean : s.avg_time_util_mean;
  }
  std::string out = x_is_tasks ? "# num_tasks" : "# num_vms";
  for (const std::string& a : algs) out += " " + a;
  out += '\n';
  for (const auto& [point, values] : by_point) {
    out += std::to_string(x_is_tasks ? point.first : point.second);
    for (const std::string& a : algs) {
      const auto it = values.find(a);
      out += ' ';
      out += it == values.end() ? "nan" : fmt(it->second);
    }
    out += '\n';
  }
  return out;
}

}  // namespace

void emit_outputs(const std::vector<ResultRow>& rows, const Summary& summary,
                  const std::filesystem::path& outdir) {
  std::filesystem::create_directories(outdir);

  std::string results(kResultsHeader);
  results += '\n';
  for (const ResultRow& r : rows) {
    if (r.status != "ok") continue;
    results += r.algorithm;
    results += ',' + std::to_string(r.num_tasks);
    results += ',' + std::to_string(r.num_vms);
    results += ',' + std::to_string(r.seed);
    results += ',' + fmt(r.metrics.makespan);
    results += ',' + fmt(r.metrics.util_sum);
    results += ',' + fmt(r.metrics.avg_time_util);
    results += ',' + fmt(r.metrics.fitness);
    results += ',' + fmt(r.wall_time_ms);
    results += '\n';
  }
  write_file(outdir / "results.csv", results);

  std::string sum =
      "algorithm,num_tasks,num_vms,seeds,makespan_mean,makespan_std,util_sum_mean,"
      "util_sum_std,avg_time_util_mean,avg_time_util_std,fitness_mean,fitness_std\n";
  for (const GridPointStat& s : summary.stats) {
    sum += s.algorithm;
    sum += ',' + std::to_string(s.num_tasks);
    sum += ',' + std::to_string(s.num_vms);
    sum += ',' + std::to_string(s.seeds);
    sum += ',' + fmt(s.makespan_mean);
    sum += ',' + fmt(s.makespan_std);
    sum += ',' + fmt(s.util_sum_mean);
    sum += ',' + fmt(s.util_sum_std);
    sum += ',' + fmt(s.avg_time_util_mean);
    sum += ',' + fmt(s.avg_time_util_std);
    sum += ',' + fmt(s.fitness_mean);
    sum += ',' + fmt(s.fitness_std);
    sum += '\n';
  }
  write_file(outdir / "summary.csv", sum);

  std::string gains = "baseline,makespan_gain_pct,avg_time_util_gain_pct\n";
  for (const GainRow& g : summary.gains) {
    gains += g.baseline;
    gains += ',' + fmt(g.makespan_gain_pct);
    gains += ',' + fmt(g.avg_time_util_gain_pct);
    gains += '\n';
  }
  write_file(outdir / "gains.csv", gains);

  std::vector<std::string> algs;
  for (const std::string& name : known_algorithms()) {
    for (const GridPointStat& s : summary.stats) {
      if (s.algorithm == name) {
        algs.push_back(name);
        break;
      }
    }
  }
  write_file(outdir / "fig_makespan_vs_tasks.dat", plot_data(summary.stats, algs, true, true));
  write_file(outdir / "fig_util_vs_tasks.dat", plot_data(summary.stats, algs, true, false));
  write_file(outdir / "fig_makespan_vs_vms.dat", plot_data(summary.stats, algs, false, true));
  write_file(outdir / "fig_util_vs_vms.dat", plot_data(summary.stats, algs, false, false));
}

std::vector<ResultRow> read_results_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kResultsHeader) {
    throw std::runtime_error("results csv: unexpected header in " + path.string());
  }
  std::vector<ResultRow> rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::array<std::string_view, 9> fields;
    std::string_view rest = line;
    for (int f = 0; f < 9; ++f) {
      const std::size_t comma = rest.find(',');
      if (f < 8 && comma == std::string_view::npos) {
        throw std::runtime_error("results csv: short row '" + line + "'");
      }
      fields[f] = rest.substr(0, comma);
      rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
    }
    ResultRow r;
    r.algorithm = std::string(fields[0]);
    r.num_tasks = static_cast<int>(parse_u64(fields[1], "num_tasks"));
    r.num_vms = static_cast<int>(parse_u64(fields[2], "num_vms"));
    r.seed = parse_u64(fields[3], "seed");
    r.metrics.makespan = parse_double(fields[4], "makespan");
    r.metrics.util_sum = parse_double(fields[5], "util_sum");
    r.metrics.avg_time_util = parse_double(fields[6], "avg_time_util");
    r.metrics.fitness = parse_double(fields[7], "fitness");
    r.wall_time_ms = parse_double(fields[8], "wall_time_ms");
    rows.push_back(std::move(r));
  }
  return rows;
}

ExperimentConfig desk_preset() {
  ExperimentConfig c;
  c.task_counts = {200, 500, 1000, 2000};
  c.vm_counts = {8, 16, 32};
  c.seeds = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  c.gsa.max_iters = 150;
  c.gsa.g_schedule = GSchedule::kExponential;
  c.gsa.g0 = 30.0;
  c.gsa.phi = -6.0;
  c.gsa.v_max = 1.0;
  c.gsa.init = GsaInit::kHeuristicSeeded;
  c.gsa.acceptance = MoveAcceptance::kImproveOnly;
  c.pso.max_iters = 150;
  // Demote the utilization term to a tie-break. util_sum spans hundreds on
  // generated workloads, so a weight much above 1e-6/m lets an optimizer buy
  // denominator by concentrating resource demand at the cost of makespan.
  c.fitness.delta_scale = 1e-6;
  c.olb_mode = OlbMode::kRandom;
  return c;
}

namespace {

std::pair<double, double> to_range(const nlohmann::json& j, const char* name) {
  if (!j.is_array() || j.size() != 2) {
    throw std::runtime_error(std::string("config: ") + name + " must be [lo, hi]");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

template <typename Enum>
Enum parse_enum(const std::string& text, const char* name,
                std::initializer_list<std::pair<std::string_view, Enum>> table) {
  for (const auto& [key, value] : table) {
    if (text == key) return value;
  }
  throw std::runtime_error(std::string("config: unknown ") + name + " '" + text + "'");
}

}  // namespace

ExperimentConfig load_config(const std::filesystem::path& path, bool desk) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config " + path.string());
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("config parse error in " + path.string() + ": " + e.what());
  }

  ExperimentConfig c = desk ? desk_preset() : ExperimentConfig{};
  if (j.contains("task_counts")) c.task_counts = j["task_counts"].get<std::vector<int>>();
  if (j.contains("vm_counts")) c.vm_counts = j["vm_counts"].get<std::vector<int>>();
  if (j.contains("mode")) {
    c.mode = parse_enum<SweepMode>(j["mode"].get<std::string>(), "mode",
                                   {{"sweep-tasks", SweepMode::kSweepTasks},
                                    {"sweep-vms", SweepMode::kSweepVms}});
  }
  if (j.contains("algorithms")) {
    c.algorithms = j["algorithms"].get<std::vector<std::string>>();
  }
  if (j.contains("seeds")) c.seeds = j["seeds"].get<std::vector<std::uint64_t>>();
  if (j.contains("out_dir")) c.out_dir = j["out_dir"].get<std::string>();
  if (j.contains("record_wall_time")) c.record_wall_time = j["record_wall_time"].get<bool>();
  if (j.contains("workers")) c.workers = j["workers"].get<int>();
  if (j.contains("olb_mode")) {
    c.olb_mode = parse_enum<OlbMode>(j["olb_mode"].get<std::string>(), "olb_mode",
                                     {{"least-ready", OlbMode::kLeastReady},
                                      {"random", OlbMode::kRandom}});
  }

  if (j.contains("gsa")) {
    const auto& g = j["gsa"];
    if (g.contains("population_size")) c.gsa.population_size = g["population_size"].get<int>();
    if (g.contains("g0")) c.gsa.g0 = g["g0"].get<double>();
    if (g.contains("alpha")) c.gsa.alpha = g["alpha"].get<double>();
    if (g.contains("phi")) c.gsa.phi = g["phi"].get<double>();
    if (g.contains("mass_eps")) c.gsa.mass_eps = g["mass_eps"].get<double>();
    if (g.contains("r_eps")) c.gsa.r_eps = g["r_eps"].get<double>();
    if (g.contains("max_iters")) c.gsa.max_iters = g["max_iters"].get<int>();
    if (g.contains("stagnation_window")) {
      c.gsa.stagnation_window = g["stagnation_window"].get<int>();
    }
    if (g.contains("v_max")) c.gsa.v_max = g["v_max"].get<double>();
    if (g.contains("g_schedule")) {
      c.gsa.g_schedule = parse_enum<GSchedule>(
          g["g_schedule"].get<std::string>(), "g_schedule",
          {{"power", GSchedule::kPower}, {"exponential", GSchedule::kExponential}});
    }
    if (g.contains("init")) {
      c.gsa.init = parse_enum<GsaInit>(g["init"].get<std::string>(), "init",
                                       {{"uniform", GsaInit::kUniform},
                                        {"heuristic-seeded", GsaInit::kHeuristicSeeded}});
    }
    if (g.contains("acceptance")) {
      c.gsa.acceptance = parse_enum<MoveAcceptance>(
          g["acceptance"].get<std::string>(), "acceptance",
          {{"always", MoveAcceptance::kAlways},
           {"improve-only", MoveAcceptance::kImproveOnly}});
    }
  }

  if (j.contains("pso")) {
    const auto& p = j["pso"];
    if (p.contains("swarm_size")) c.pso.swarm_size = p["swarm_size"].get<int>();
    if (p.contains("max_iters")) c.pso.max_iters = p["max_iters"].get<int>();
    if (p.contains("schedule")) {
      c.pso.schedule = parse_enum<InertiaSchedule>(
          p["schedule"].get<std::string>(), "schedule",
          {{"constant", InertiaSchedule::kConstant},
           {"linear", InertiaSchedule::kLinear},
           {"adaptive", InertiaSchedule::kAdaptive}});
    }
    if (p.contains("w_high")) c.pso.w_high = p["w_high"].get<double>();
    if (p.contains("w_low")) c.pso.w_low = p["w_low"].get<double>();
    if (p.contains("c1")) c.pso.c1 = p["c1"].get<double>();
    if (p.contains("c2")) c.pso.c2 = p["c2"].get<double>();
    if (p.contains("v_max")) c.pso.v_max = p["v_max"].get<double>();
  }

  if (j.contains("fitness")) {
    const auto& f = j["fitness"];
    if (f.contains("gamma")) c.fitness.gamma = f["gamma"].get<double>();
    if (f.contains("delta")) c.fitness.delta = f["delta"].get<double>();
    if (f.contains("eps1")) c.fitness.eps1 = f["eps1"].get<double>();
    if (f.contains("eps2")) c.fitness.eps2 = f["eps2"].get<double>();
    if (f.contains("gamma_scale")) c.fitness.gamma_scale = f["gamma_scale"].get<double>();
    if (f.contains("delta_scale")) c.fitness.delta_scale = f["delta_scale"].get<double>();
  }

  if (j.contains("workload")) {
    const auto& w = j["workload"];
    if (w.contains("time_req_range")) {
      c.workload.time_req_range = to_range(w["time_req_range"], "time_req_range");
    }
    if (w.contains("resource_req_range")) {
      c.workload.resource_req_range =
          to_range(w["resource_req_range"], "resource_req_range");
    }
    if (w.contains("capacity_range")) {
      c.workload.capacity_range = to_range(w["capacity_range"], "capacity_range");
    }
    if (w.contains("speed_range")) {
      c.workload.speed_range = to_range(w["speed_range"], "speed_range");
    }
  }

  c.validate();
  return c;
}

}  // namespace gsched
