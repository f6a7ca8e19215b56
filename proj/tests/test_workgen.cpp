#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <set>
#include <stdexcept>
#include <string>

#include "fixtures.hpp"
#include "gsched/workgen.hpp"

using namespace gsched;

namespace {

/// Temp file that cleans up after itself.
struct TempFile {
  std::filesystem::path path;
  explicit TempFile(const std::string& name)
      : path(std::filesystem::temp_directory_path() / name) {}
  ~TempFile() { std::filesystem::remove(path); }
};

}  // namespace

TEST_CASE("generator spec validation") {
  GenSpec spec;
  spec.num_tasks = 4;
  spec.num_vms = 2;
  CHECK_NOTHROW(spec.validate());

  spec.num_tasks = 0;
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

  spec.num_tasks = 4;
  spec.time_req_range = {0.0, 10.0};  // lower bound must be positive
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);

  spec.time_req_range = {10.0, 5.0};  // inverted
  CHECK_THROWS_AS(spec.validate(), std::invalid_argument);
}

TEST_CASE("generation is deterministic per seed") {
  GenSpec spec;
  spec.num_tasks = 200;
  spec.num_vms = 16;
  spec.seed = 7;
  const Workload a = generate_workload(spec);
  const Workload b = generate_workload(spec);
  CHECK(a == b);

  spec.seed = 8;
  const Workload c = generate_workload(spec);
  CHECK(!(a == c));
}

TEST_CASE("generated values respect the configured ranges") {
  GenSpec spec;
  spec.num_tasks = 10000;
  spec.num_vms = 1000;
  spec.time_req_range = {1.0, 100.0};
  spec.resource_req_range = {1.0, 16.0};
  spec.capacity_range = {16.0, 64.0};
  spec.speed_range = {0.5, 2.0};
  spec.seed = 99;
  const Workload w = generate_workload(spec);
  REQUIRE(w.num_tasks() == 10000);
  REQUIRE(w.num_vms() == 1000);
  for (const Task& t : w.tasks) {
    CHECK(t.time_req >= 1.0);
    CHECK(t.time_req <= 100.0);
    CHECK(t.resource_req >= 1.0);
    CHECK(t.resource_req <= 16.0);
  }
  for (const Vm& v : w.vms) {
    CHECK(v.capacity >= 16.0);
    CHECK(v.capacity <= 64.0);
    CHECK(v.speed >= 0.5);
    CHECK(v.speed <= 2.0);
  }
}

TEST_CASE("degenerate ranges pin the value") {
  GenSpec spec;
  spec.num_tasks = 20;
  spec.num_vms = 5;
  spec.time_req_range = {5.0, 5.0};
  const Workload w = generate_workload(spec);
  for (const Task& t : w.tasks) CHECK(t.time_req == 5.0);
  // Default speed range is the constant 1.0.
  for (const Vm& v : w.vms) CHECK(v.speed == 1.0);
}

TEST_CASE("nearby seeds give distinct workloads") {
  GenSpec spec;
  spec.num_tasks = 3;
  spec.num_vms = 2;
  std::set<double> first_times;
  for (std::uint64_t s = 0; s < 100; ++s) {
    spec.seed = s;
    first_times.insert(generate_workload(spec).tasks[0].time_req);
  }
  CHECK(first_times.size() == 100);
}

TEST_CASE("workload files round-trip exactly") {
  const TempFile tmp("gsched_roundtrip.json");

  GenSpec spec;
  spec.num_tasks = 37;
  spec.num_vms = 6;
  spec.speed_range = {0.25, 3.0};
  spec.seed = 13;
  const Workload w = generate_workload(spec);

  write_workload(w, tmp.path);
  const Workload back = read_workload(tmp.path);
  CHECK(back == w);
}

TEST_CASE("reading rejects invalid or incomplete files") {
  SUBCASE("negative time requirement") {
    const TempFile tmp("gsched_bad_time.json");
    std::ofstream(tmp.path) << R"({
      "tasks": [{"id": 0, "time_req": -1.0, "resource_req": 2.0}],
      "vms": [{"id": 0, "capacity": 10.0, "speed": 1.0}]
    })";
    CHECK_THROWS_AS(read_workload(tmp.path), std::invalid_argument);
  }
  SUBCASE("missing vms section") {
    const TempFile tmp("gsched_no_vms.json");
    std::ofstream(tmp.path) << R"({
      "tasks": [{"id": 0, "time_req": 1.0, "resource_req": 2.0}]
    })";
    CHECK_THROWS_WITH_AS(read_workload(tmp.path),
                         doctest::Contains("missing 'vms' section"),
                         std::runtime_error);
  }
  SUBCASE("missing field inside a task") {
    const TempFile tmp("gsched_short_task.json");
    std::ofstream(tmp.path) << R"({
      "tasks": [{"id": 0, "time_req": 1.0}],
      "vms": [{"id": 0, "capacity": 10.0, "speed": 1.0}]
    })";
    CHECK_THROWS_WITH_AS(read_workload(tmp.path),
                         doctest::Contains("malformed field"),
                         std::runtime_error);
  }
  SUBCASE("not JSON at all") {
    const TempFile tmp("gsched_not_json.json");
    std::ofstream(tmp.path) << "makespan <= util";
    CHECK_THROWS_WITH_AS(read_workload(tmp.path), doctest::Contains("parse error"),
                         std::runtime_error);
  }
  SUBCASE("nonexistent path") {
    CHECK_THROWS_AS(read_workload("/nonexistent/dir/w.json"), std::runtime_error);
  }
}
