#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "locus/mbfl.hpp"
#include "locus/minilang/interp.hpp"
#include "locus/outcome.hpp"
#include "locus/ps.hpp"
#include "locus/spectrum.hpp"
#include "locus/st.hpp"

namespace locus::io {

// JSON Lines codecs for every run-store stage and external ingestion format.
// Readers throw FormatError with the offending line number; writers emit one
// object per line, LF-terminated, with deterministic key order.

// tests.jsonl — one object per test:
//   {"test_id": ..., "outcome": "pass"|"fail"|"crash",
//    "covered": [{"file":...,"line":...}...],
//    "stack": [{"function":...,"file":...,"line":...}...],  (crash only)
//    "detail": ...}                                          (optional)
std::string spectrum_to_jsonl(const SpectrumMatrix& matrix);
SpectrumMatrix spectrum_from_jsonl(const std::string& text);
SpectrumMatrix read_spectrum(const std::string& path);
void write_spectrum(const SpectrumMatrix& matrix, const std::string& path);

// mutants.jsonl
std::string mutants_to_jsonl(const std::vector<minilang::Mutant>& mutants);
std::vector<minilang::Mutant> mutants_from_jsonl(const std::string& text);

// kills.jsonl
std::string kills_to_jsonl(const std::vector<KillRecord>& kills);
std::vector<KillRecord> kills_from_jsonl(const std::string& text);

// traces.jsonl — {"test_id":..., "frames":[{"function","file","line"}...]}
std::string traces_to_jsonl(
    const std::vector<std::pair<std::string, StackTrace>>& traces);
std::vector<std::pair<std::string, StackTrace>> traces_from_jsonl(
    const std::string& text);
std::vector<std::pair<std::string, StackTrace>> read_traces(
    const std::string& path);

// functions.jsonl — {"name","file","start_line","end_line","lines":[...]}
std::string functions_to_jsonl(const std::vector<StFunction>& functions);
std::vector<StFunction> functions_from_jsonl(const std::string& text);
std::vector<StFunction> read_functions(const std::string& path);

// ps_instances.jsonl — one object per failing test
std::string ps_instances_to_jsonl(
    const std::map<std::string, std::vector<minilang::PredicateInstanceRec>>&
        instances);
std::map<std::string, std::vector<minilang::PredicateInstanceRec>>
ps_instances_from_jsonl(const std::string& text);

// ps_flips.jsonl — one object per attempted flip
std::string ps_flips_to_jsonl(const std::vector<FlipResult>& flips);
std::vector<FlipResult> ps_flips_from_jsonl(const std::string& text);

}  // namespace locus::io
