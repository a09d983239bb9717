#include "locus/io/run_store.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "locus/errors.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace locus::io {

RunStore RunStore::create(const std::string& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) raise(ErrorCode::IoFailure, "cannot create run store at " + dir);
  return RunStore(dir);
}

RunStore RunStore::open(const std::string& dir) {
  if (!fs::is_directory(dir))
    raise(ErrorCode::IoFailure, "no run store at " + dir);
  return RunStore(dir);
}

std::string RunStore::stage_path(const std::string& stage) const {
  return (fs::path(dir_) / stage).string();
}

bool RunStore::has_stage(const std::string& stage) const {
  return fs::is_regular_file(stage_path(stage));
}

void RunStore::write_stage(const std::string& stage,
                           const std::string& content) {
  const std::string path = stage_path(stage);
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::IoFailure, "cannot open " + path + " for write");
  out.write(content.data(), static_cast<std::streamsize>(content.size()));
  if (!out) raise(ErrorCode::IoFailure, "write to " + path + " failed");
}

std::string RunStore::read_stage(const std::string& stage) const {
  if (!has_stage(stage))
    raise(ErrorCode::MissingStage,
          "run store " + dir_ + " has no stage " + stage);
  std::ifstream in(stage_path(stage), std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void RunStore::write_config(const RunConfig& config) {
  json j;
  j["src"] = config.src;
  j["family"] = family_name(config.family);
  j["granularity"] = granularity_name(config.granularity);
  j["failing_list"] = config.failing_list;
  j["output"] = config.output_dir;
  j["dstar_exponent"] = config.dstar_exponent;
  j["ps_budget"] = config.ps_budget;
  j["step_budget"] = config.step_budget;
  j["jobs"] = config.jobs;
  write_stage("config.json", j.dump(2) + "\n");
}

RunConfig RunStore::read_config() const {
  const std::string text = read_stage("config.json");
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& error) {
    raise(ErrorCode::FormatError,
          dir_ + "/config.json: " + std::string(error.what()));
  }
  RunConfig config;
  config.src = j.value("src", "");
  config.family = family_from_name(j.value("family", "sbfl"));
  config.granularity =
      granularity_from_name(j.value("granularity", "statement"));
  config.failing_list = j.value("failing_list", std::vector<std::string>{});
  config.output_dir = j.value("output", "");
  config.dstar_exponent = j.value("dstar_exponent", 2);
  config.ps_budget = j.value("ps_budget", 10'000);
  config.step_budget = j.value("step_budget", std::uint64_t{1'000'000});
  config.jobs = j.value("jobs", 1);
  return config;
}

void RunStore::write_timings(
    const std::map<std::string, double>& family_seconds) {
  json j(family_seconds);
  write_stage("timings.json", j.dump(2) + "\n");
}

std::map<std::string, double> RunStore::read_timings() const {
  const std::string text = read_stage("timings.json");
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& error) {
    raise(ErrorCode::FormatError,
          dir_ + "/timings.json: " + std::string(error.what()));
  }
  std::map<std::string, double> out;
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number())
      raise(ErrorCode::FormatError, dir_ + "/timings.json: non-numeric entry");
    out[key] = value.get<double>();
  }
  return out;
}

}  // namespace locus::io
