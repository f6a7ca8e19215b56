#include "gsched/workgen.hpp"

#include <fstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "gsched/rng.hpp"

namespace gsched {

namespace {

void check_range(const std::pair<double, double>& r, const char* name) {
  if (!(r.first > 0.0) || !(r.first <= r.second)) {
    throw std::invalid_argument(std::string("gen spec: ") + name +
                                " must satisfy 0 < lo <= hi");
  }
}

/// Field tags keep each generated attribute on its own substream.
enum Field : std::uint64_t { kTime = 1, kResource = 2, kCapacity = 3, kSpeed = 4 };

}  // namespace

void GenSpec::validate() const {
  if (num_tasks < 1) throw std::invalid_argument("gen spec: num_tasks must be >= 1");
  if (num_vms < 1) throw std::invalid_argument("gen spec: num_vms must be >= 1");
  check_range(time_req_range, "time_req_range");
  check_range(resource_req_range, "resource_req_range");
  check_range(capacity_range, "capacity_range");
  check_range(speed_range, "speed_range");
}

Workload generate_workload(const GenSpec& spec) {
  spec.validate();
  Workload w;
  w.tasks.reserve(spec.num_tasks);
  w.vms.reserve(spec.num_vms);
  for (int j = 0; j < spec.num_tasks; ++j) {
    const auto ju = static_cast<std::uint64_t>(j);
    w.tasks.push_back(Task{
        .id = j,
        .time_req = rng::uniform(spec.time_req_range.first, spec.time_req_range.second,
                                 spec.seed, rng::kWorkloadField, kTime, ju),
        .resource_req = rng::uniform(spec.resource_req_range.first,
                                     spec.resource_req_range.second, spec.seed,
                                     rng::kWorkloadField, kResource, ju),
    });
  }
  for (int i = 0; i < spec.num_vms; ++i) {
    const auto iu = static_cast<std::uint64_t>(i);
    w.vms.push_back(Vm{
        .id = i,
        .capacity = rng::uniform(spec.capacity_range.first, spec.capacity_range.second,
                                 spec.seed, rng::kWorkloadField, kCapacity, iu),
        .speed = rng::uniform(spec.speed_range.first, spec.speed_range.second,
                              spec.seed, rng::kWorkloadField, kSpeed, iu),
    });
  }
  validate_workload(w);
  return w;
}

void write_workload(const Workload& workload, const std::filesystem::path& path) {
  validate_workload(workload);
  nlohmann::json doc;
  doc["tasks"] = nlohmann::json::array();
  for (const Task& t : workload.tasks) {
    doc["tasks"].push_back(
        {{"id", t.id}, {"time_req", t.time_req}, {"resource_req", t.resource_req}});
  }
  doc["vms"] = nlohmann::json::array();
  for (const Vm& v : workload.vms) {
    doc["vms"].push_back({{"id", v.id}, {"capacity", v.capacity}, {"speed", v.speed}});
  }
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot open " + path.string() + " for writing");
  }
  out << doc.dump(2) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

Workload read_workload(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("parse error in " + path.string() + ": " + e.what());
  }
  if (!doc.contains("tasks")) {
    throw std::runtime_error(path.string() + ": missing 'tasks' section");
  }
  if (!doc.contains("vms")) {
    throw std::runtime_error(path.string() + ": missing 'vms' section");
  }
  Workload w;
  try {
    for (const auto& jt : doc["tasks"]) {
      w.tasks.push_back(Task{.id = jt.at("id").get<int>(),
                             .time_req = jt.at("time_req").get<double>(),
                             .resource_req = jt.at("resource_req").get<double>()});
    }
    for (const auto& jv : doc["vms"]) {
      w.vms.push_back(Vm{.id = jv.at("id").get<int>(),
                         .capacity = jv.at("capacity").get<double>(),
                         .speed = jv.at("speed").get<double>()});
    }
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed field in " + path.string() + ": " + e.what());
  }
  validate_workload(w);
  return w;
}

}  // namespace gsched
