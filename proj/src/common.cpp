#include "locus/errors.hpp"
#include "locus/granularity.hpp"
#include "locus/outcome.hpp"
#include "locus/technique.hpp"

namespace locus {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NoFailingTests: return "NoFailingTests";
    case ErrorCode::OverlappingSpans: return "OverlappingSpans";
    case ErrorCode::ParseFailure: return "ParseFailure";
    case ErrorCode::UnknownTest: return "UnknownTest";
    case ErrorCode::UnknownFunction: return "UnknownFunction";
    case ErrorCode::FormatError: return "FormatError";
    case ErrorCode::DuplicateTest: return "DuplicateTest";
    case ErrorCode::MissingStage: return "MissingStage";
    case ErrorCode::IoFailure: return "IoFailure";
    case ErrorCode::NotActuallyFailing: return "NotActuallyFailing";
    case ErrorCode::MissingBug: return "MissingBug";
  }
  return "Unknown";
}

const char* test_status_name(TestStatus status) {
  switch (status) {
    case TestStatus::Pass: return "pass";
    case TestStatus::Fail: return "fail";
    case TestStatus::Crash: return "crash";
  }
  return "fail";
}

TestStatus test_status_from_name(const std::string& name) {
  if (name == "pass") return TestStatus::Pass;
  if (name == "fail") return TestStatus::Fail;
  if (name == "crash") return TestStatus::Crash;
  raise(ErrorCode::FormatError, "unknown test outcome \"" + name + "\"");
}

const char* granularity_name(Granularity granularity) {
  return granularity == Granularity::Statement ? "statement" : "function";
}

Granularity granularity_from_name(const std::string& name) {
  if (name == "statement") return Granularity::Statement;
  if (name == "function") return Granularity::Function;
  raise(ErrorCode::FormatError, "unknown granularity \"" + name + "\"");
}

const char* family_name(Family family) {
  switch (family) {
    case Family::Sbfl: return "sbfl";
    case Family::Mbfl: return "mbfl";
    case Family::Ps: return "ps";
    case Family::St: return "st";
  }
  return "sbfl";
}

Family family_from_name(const std::string& name) {
  if (name == "sbfl") return Family::Sbfl;
  if (name == "mbfl") return Family::Mbfl;
  if (name == "ps") return Family::Ps;
  if (name == "st") return Family::St;
  raise(ErrorCode::FormatError, "unknown family \"" + name + "\"");
}

const char* technique_name(Technique technique) {
  switch (technique) {
    case Technique::Tarantula: return "tarantula";
    case Technique::Ochiai: return "ochiai";
    case Technique::DStar: return "dstar";
    case Technique::Metallaxis: return "metallaxis";
    case Technique::Muse: return "muse";
    case Technique::Ps: return "ps";
    case Technique::St: return "st";
  }
  return "tarantula";
}

Technique technique_from_name(const std::string& name) {
  if (name == "tarantula") return Technique::Tarantula;
  if (name == "ochiai") return Technique::Ochiai;
  if (name == "dstar") return Technique::DStar;
  if (name == "metallaxis") return Technique::Metallaxis;
  if (name == "muse") return Technique::Muse;
  if (name == "ps") return Technique::Ps;
  if (name == "st") return Technique::St;
  raise(ErrorCode::FormatError, "unknown technique \"" + name + "\"");
}

Family technique_family(Technique technique) {
  switch (technique) {
    case Technique::Tarantula:
    case Technique::Ochiai:
    case Technique::DStar: return Family::Sbfl;
    case Technique::Metallaxis:
    case Technique::Muse: return Family::Mbfl;
    case Technique::Ps: return Family::Ps;
    case Technique::St: return Family::St;
  }
  return Family::Sbfl;
}

std::vector<Technique> family_techniques(Family family) {
  switch (family) {
    case Family::Sbfl:
      return {Technique::Tarantula, Technique::Ochiai, Technique::DStar};
    case Family::Mbfl: return {Technique::Metallaxis, Technique::Muse};
    case Family::Ps: return {Technique::Ps};
    case Family::St: return {Technique::St};
  }
  return {};
}

}  // namespace locus
