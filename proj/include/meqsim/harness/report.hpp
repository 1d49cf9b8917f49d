#pragma once

#include <json.hpp>

#include "meqsim/harness/config.hpp"
#include "meqsim/meq/params.hpp"
#include "meqsim/meq/query.hpp"
#include "meqsim/meq/strategy.hpp"

namespace meqsim::harness {

using json = nlohmann::ordered_json;

inline constexpr const char* kSchemaTag = "meqsim.report/1";

json config_record(const ExperimentConfig& config, const meq::ProtocolParams& params);
json query_record(int trial, int index, const meq::TranscriptEntry& entry);
struct TrialStats {
    int trial = 0;
    meq::ProtocolOutput output;
    meq::ProtocolOutput oracle_output;
    bool match = false;
    int transcript_length = 0;
    std::optional<double> exact_path_probability;
    std::optional<double> gao;
    meq::CostReport cost;
};
json trial_record(const TrialStats& stats);
json summary_record(int trials, int matches, std::optional<double> analytic_error_bound);
json error_record(int trial, const std::string& message, int required_qubits, int cap);

json output_to_json(const meq::ProtocolOutput& output);

// Agreement in the sense the protocols promise: reconstruct-or-reject runs
// compare the accept flag and the rebuilt graph, never the elimination
// order; everything else compares exactly.
bool output_matches(const meq::ProtocolOutput& got, const meq::ProtocolOutput& want);

// Structural check of one report line against the record schemas; returns
// an empty string when fine, else the complaint.
std::string validate_record(const json& record);

} // namespace meqsim::harness
