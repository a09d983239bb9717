#include "locus/io/stages.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"
#include "locus/errors.hpp"

using nlohmann::json;

namespace locus::io {

namespace {

[[noreturn]] void format_fail(int line, const std::string& reason) {
  raise(ErrorCode::FormatError,
        "line " + std::to_string(line) + ": " + reason);
}

// Applies `fn` to each nonempty line, with 1-based numbering; json parse
// errors become FormatError.
template <typename F>
void for_each_line(const std::string& text, F&& fn) {
  std::istringstream in(text);
  std::string line;
  int number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    json parsed;
    try {
      parsed = json::parse(line);
    } catch (const json::parse_error& error) {
      format_fail(number, std::string("invalid JSON (") + error.what() + ")");
    }
    fn(number, parsed);
  }
}

std::string require_string(const json& j, const char* key, int line) {
  if (!j.contains(key) || !j[key].is_string())
    format_fail(line, std::string("missing string field \"") + key + "\"");
  return j[key].get<std::string>();
}

int require_int(const json& j, const char* key, int line) {
  if (!j.contains(key) || !j[key].is_number_integer())
    format_fail(line, std::string("missing integer field \"") + key + "\"");
  return j[key].get<int>();
}

int require_positive_line(const json& j, int row) {
  const int value = require_int(j, "line", row);
  if (value <= 0) format_fail(row, "\"line\" must be positive");
  return value;
}

json frame_to_json(const Frame& frame) {
  return json{{"function", frame.function},
              {"file", frame.file},
              {"line", frame.line}};
}

Frame frame_from_json(const json& j, int row) {
  Frame frame;
  frame.function = require_string(j, "function", row);
  frame.file = require_string(j, "file", row);
  frame.line = require_positive_line(j, row);
  return frame;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) raise(ErrorCode::IoFailure, "cannot read " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

// ---------------------------------------------------------------------------
// tests.jsonl
// ---------------------------------------------------------------------------

std::string spectrum_to_jsonl(const SpectrumMatrix& matrix) {
  std::string out;
  for (const auto& record : matrix.records()) {
    json j;
    j["test_id"] = record.test_id;
    j["outcome"] = test_status_name(record.outcome.status);
    json covered = json::array();
    for (const auto& entity : record.covered)
      covered.push_back(json{{"file", entity.file}, {"line", entity.line}});
    j["covered"] = std::move(covered);
    if (record.outcome.stack_trace) {
      json stack = json::array();
      for (const auto& frame : record.outcome.stack_trace->frames)
        stack.push_back(frame_to_json(frame));
      j["stack"] = std::move(stack);
    }
    if (!record.outcome.failure_detail.empty())
      j["detail"] = record.outcome.failure_detail;
    out += j.dump();
    out += "\n";
  }
  return out;
}

SpectrumMatrix spectrum_from_jsonl(const std::string& text) {
  SpectrumMatrix matrix;
  for_each_line(text, [&](int row, const json& j) {
    ExecutionRecord record;
    record.test_id = require_string(j, "test_id", row);
    record.outcome.status =
        test_status_from_name(require_string(j, "outcome", row));
    if (!j.contains("covered") || !j["covered"].is_array())
      format_fail(row, "missing array field \"covered\"");
    for (const auto& item : j["covered"]) {
      record.covered.push_back(Entity::statement(
          require_string(item, "file", row), require_positive_line(item, row)));
    }
    if (j.contains("detail"))
      record.outcome.failure_detail = j["detail"].get<std::string>();
    if (record.outcome.status == TestStatus::Crash) {
      if (!j.contains("stack") || !j["stack"].is_array() ||
          j["stack"].empty())
        format_fail(row, "crash outcome needs a nonempty \"stack\"");
      StackTrace trace;
      for (const auto& item : j["stack"])
        trace.frames.push_back(frame_from_json(item, row));
      record.outcome.stack_trace = std::move(trace);
    } else if (j.contains("stack")) {
      format_fail(row, "only crash outcomes carry a \"stack\"");
    }
    matrix.add(std::move(record));
  });
  return matrix;
}

SpectrumMatrix read_spectrum(const std::string& path) {
  try {
    return spectrum_from_jsonl(read_text_file(path));
  } catch (const Error& error) {
    if (error.code() != ErrorCode::FormatError) throw;
    raise(ErrorCode::FormatError, path + ": " + error.what());
  }
}

void write_spectrum(const SpectrumMatrix& matrix, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) raise(ErrorCode::IoFailure, "cannot open " + path + " for write");
  const std::string text = spectrum_to_jsonl(matrix);
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) raise(ErrorCode::IoFailure, "write to " + path + " failed");
}

// ---------------------------------------------------------------------------
// mutants.jsonl / kills.jsonl
// ---------------------------------------------------------------------------

std::string mutants_to_jsonl(const std::vector<minilang::Mutant>& mutants) {
  std::string out;
  for (const auto& mutant : mutants) {
    json j;
    j["id"] = mutant.id;
    j["file"] = mutant.location.file;
    j["line"] = mutant.location.line;
    j["operator"] = mutant.op_tag;
    j["description"] = mutant.description;
    out += j.dump();
    out += "\n";
  }
  return out;
}

std::vector<minilang::Mutant> mutants_from_jsonl(const std::string& text) {
  std::vector<minilang::Mutant> mutants;
  for_each_line(text, [&](int row, const json& j) {
    minilang::Mutant mutant;
    mutant.id = require_string(j, "id", row);
    mutant.location = Entity::statement(require_string(j, "file", row),
                                        require_positive_line(j, row));
    mutant.op_tag = require_string(j, "operator", row);
    mutant.description = require_string(j, "description", row);
    mutants.push_back(std::move(mutant));
  });
  return mutants;
}

std::string kills_to_jsonl(const std::vector<KillRecord>& kills) {
  std::string out;
  for (const auto& record : kills) {
    json changes = json::array();
    for (const auto& [test, change] : record.changes)
      changes.push_back(
          json{{"test_id", test}, {"change", outcome_change_name(change)}});
    json j;
    j["mutant_id"] = record.mutant_id;
    j["changes"] = std::move(changes);
    out += j.dump();
    out += "\n";
  }
  return out;
}

std::vector<KillRecord> kills_from_jsonl(const std::string& text) {
  std::vector<KillRecord> kills;
  for_each_line(text, [&](int row, const json& j) {
    KillRecord record;
    record.mutant_id = require_string(j, "mutant_id", row);
    if (!j.contains("changes") || !j["changes"].is_array())
      format_fail(row, "missing array field \"changes\"");
    for (const auto& item : j["changes"])
      record.changes.emplace_back(
          require_string(item, "test_id", row),
          outcome_change_from_name(require_string(item, "change", row)));
    kills.push_back(std::move(record));
  });
  return kills;
}

// ---------------------------------------------------------------------------
// traces.jsonl / functions.jsonl
// ---------------------------------------------------------------------------

std::string traces_to_jsonl(
    const std::vector<std::pair<std::string, StackTrace>>& traces) {
  std::string out;
  for (const auto& [test_id, trace] : traces) {
    json frames = json::array();
    for (const auto& frame : trace.frames) frames.push_back(frame_to_json(frame));
    json j;
    j["test_id"] = test_id;
    j["frames"] = std::move(frames);
    out += j.dump();
    out += "\n";
  }
  return out;
}

std::vector<std::pair<std::string, StackTrace>> traces_from_jsonl(
    const std::string& text) {
  std::vector<std::pair<std::string, StackTrace>> traces;
  for_each_line(text, [&](int row, const json& j) {
    StackTrace trace;
    if (!j.contains("frames") || !j["frames"].is_array() ||
        j["frames"].empty())
      format_fail(row, "missing nonempty array field \"frames\"");
    for (const auto& item : j["frames"])
      trace.frames.push_back(frame_from_json(item, row));
    traces.emplace_back(require_string(j, "test_id", row), std::move(trace));
  });
  return traces;
}

std::vector<std::pair<std::string, StackTrace>> read_traces(
    const std::string& path) {
  try {
    return traces_from_jsonl(read_text_file(path));
  } catch (const Error& error) {
    if (error.code() != ErrorCode::FormatError) throw;
    raise(ErrorCode::FormatError, path + ": " + error.what());
  }
}

std::string functions_to_jsonl(const std::vector<StFunction>& functions) {
  std::string out;
  for (const auto& fn : functions) {
    json j;
    j["name"] = fn.name;
    j["file"] = fn.file;
    j["start_line"] = fn.start_line;
    j["end_line"] = fn.end_line;
    j["lines"] = fn.lines;
    out += j.dump();
    out += "\n";
  }
  return out;
}

std::vector<StFunction> functions_from_jsonl(const std::string& text) {
  std::vector<StFunction> functions;
  for_each_line(text, [&](int row, const json& j) {
    StFunction fn;
    fn.name = require_string(j, "name", row);
    fn.file = require_string(j, "file", row);
    fn.start_line = require_int(j, "start_line", row);
    fn.end_line = require_int(j, "end_line", row);
    if (!j.contains("lines") || !j["lines"].is_array())
      format_fail(row, "missing array field \"lines\"");
    for (const auto& item : j["lines"]) {
      if (!item.is_number_integer())
        format_fail(row, "\"lines\" must hold integers");
      fn.lines.push_back(item.get<int>());
    }
    functions.push_back(std::move(fn));
  });
  return functions;
}

std::vector<StFunction> read_functions(const std::string& path) {
  try {
    return functions_from_jsonl(read_text_file(path));
  } catch (const Error& error) {
    if (error.code() != ErrorCode::FormatError) throw;
    raise(ErrorCode::FormatError, path + ": " + error.what());
  }
}

// ---------------------------------------------------------------------------
// ps_instances.jsonl / ps_flips.jsonl
// ---------------------------------------------------------------------------

std::string ps_instances_to_jsonl(
    const std::map<std::string, std::vector<minilang::PredicateInstanceRec>>&
        instances) {
  std::string out;
  for (const auto& [test_id, list] : instances) {
    json items = json::array();
    for (const auto& instance : list)
      items.push_back(json{{"file", instance.file},
                           {"line", instance.line},
                           {"index", instance.index},
                           {"observed", instance.observed}});
    json j;
    j["test_id"] = test_id;
    j["instances"] = std::move(items);
    out += j.dump();
    out += "\n";
  }
  return out;
}

std::map<std::string, std::vector<minilang::PredicateInstanceRec>>
ps_instances_from_jsonl(const std::string& text) {
  std::map<std::string, std::vector<minilang::PredicateInstanceRec>> out;
  for_each_line(text, [&](int row, const json& j) {
    const std::string test_id = require_string(j, "test_id", row);
    if (!j.contains("instances") || !j["instances"].is_array())
      format_fail(row, "missing array field \"instances\"");
    auto& list = out[test_id];
    for (const auto& item : j["instances"]) {
      minilang::PredicateInstanceRec rec;
      rec.file = require_string(item, "file", row);
      rec.line = require_positive_line(item, row);
      rec.index = require_int(item, "index", row);
      if (!item.contains("observed") || !item["observed"].is_boolean())
        format_fail(row, "missing boolean field \"observed\"");
      rec.observed = item["observed"].get<bool>();
      list.push_back(std::move(rec));
    }
  });
  return out;
}

std::string ps_flips_to_jsonl(const std::vector<FlipResult>& flips) {
  std::string out;
  for (const auto& flip : flips) {
    json j;
    j["test_id"] = flip.test_id;
    j["file"] = flip.file;
    j["line"] = flip.line;
    j["index"] = flip.index;
    j["result"] = test_status_name(flip.result);
    out += j.dump();
    out += "\n";
  }
  return out;
}

std::vector<FlipResult> ps_flips_from_jsonl(const std::string& text) {
  std::vector<FlipResult> flips;
  for_each_line(text, [&](int row, const json& j) {
    FlipResult flip;
    flip.test_id = require_string(j, "test_id", row);
    flip.file = require_string(j, "file", row);
    flip.line = require_positive_line(j, row);
    flip.index = require_int(j, "index", row);
    flip.result = test_status_from_name(require_string(j, "result", row));
    flips.push_back(std::move(flip));
  });
  return flips;
}

}  // namespace locus::io
