#pragma once

#include <json.hpp>

#include "detloc/scenario.hpp"

namespace detloc {

struct ScenarioConfig {
    std::string scenario;
    unsigned characteristic = 0;
    int t = 2;
    int k = 3;
    Multidegree multidegree;
    int cutoff = 4;
    long j = -6;          // h6-rank degree
    int degree_bound = 6;  // oracle-crosscheck sweep bound
    int jobs = 1;
    int verbosity = 1;     // 0 suppresses per-component rows in human output
    std::string data_dir;  // empty: compiled-in default
};

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

enum class Outcome { Pass, Fail, Inconclusive };
std::string outcome_name(Outcome o);

struct VerificationReport {
    std::string scenario;
    nlohmann::ordered_json inputs;
    Outcome outcome = Outcome::Fail;
    nlohmann::ordered_json details;
    /// One row per checked component for the tsv format: name, status, info.
    std::vector<std::array<std::string, 3>> rows;
    int verbosity = 1;
    double duration_ms = 0.0;  // reported in the human format only
};

VerificationReport run_scenario(const ScenarioConfig& cfg);

/// format in {json, tsv, human}.  json and tsv are byte-stable across runs
/// with identical inputs; the human format appends the wall-clock duration.
std::string emit_report(const VerificationReport& r, const std::string& format);

/// pass -> 0, fail -> 2, inconclusive -> 3 (64 is reserved for usage errors).
int exit_code(Outcome o);

nlohmann::ordered_json cohomology_report_json(const CohomologyReport& rep);

}  // namespace detloc
