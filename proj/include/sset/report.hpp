// The experiment suite E1-E11 and its replayable JSON reports.
#pragma once

#include "sset/io.hpp"

namespace sset {

struct Check {
    std::string name;
    std::string expected, observed;
    bool ok = false;
    bool informational = false;  // reported, but not part of the pass/fail total
    std::string detail;
    json witness;                // null, or a replayable witness
    std::string row, col;        // separation-matrix placement, when set
};

struct ExperimentReport {
    std::string id, title;
    json params = json::object();
    std::vector<Check> checks;
    double wall_time = 0;
    bool complete = true;  // false when a cap or truncation cut a search short
    bool ok() const;
};

const std::vector<std::string>& suite_ids();
ExperimentReport run_experiment(const std::string& id, std::uint64_t seed = 1);

json report_to_json(const ExperimentReport& r);
// Re-verifies every witness in a serialized report; returns the failures.
std::vector<std::string> replay_report(const json& j);
// Diagnostics for one witness; empty when it re-verifies.
std::vector<std::string> replay_witness(const json& w);

// Object x family table built from the checks carrying a matrix placement.
std::string separation_matrix(const std::vector<ExperimentReport>& reports);

// Shared by the suite and the CLI.
FibrancyReport run_fibrancy(const std::string& object, const std::string& family, const FamilyBounds& b);
std::string bounds_string(const FamilyBounds& b);
json no_lift_witness(const std::string& object, const FibrancyEntry& e);
FunctorCertificate example_T_functor_certificate();

}  // namespace sset
