#include "meqsim/harness/report.hpp"

#include <stdexcept>

namespace meqsim::harness {

const char* problem_name(oracle::Problem p) {
    switch (p) {
    case oracle::Problem::GroupByEq: return "group_by_eq";
    case oracle::Problem::AllEq: return "all_eq";
    case oracle::Problem::ExistsEq: return "exists_eq";
    case oracle::Problem::FrequencyMoment: return "frequency_moment";
    case oracle::Problem::P3Freeness: return "p3_freeness";
    case oracle::Problem::NeighborhoodDiversity: return "neighborhood_diversity";
    case oracle::Problem::DhReconstruct: return "dh_reconstruct";
    case oracle::Problem::IsolatedCliques: return "isolated_cliques";
    }
    return "?";
}

oracle::Problem parse_problem(const std::string& name) {
    for (auto p : {oracle::Problem::GroupByEq, oracle::Problem::AllEq,
                   oracle::Problem::ExistsEq, oracle::Problem::FrequencyMoment,
                   oracle::Problem::P3Freeness, oracle::Problem::NeighborhoodDiversity,
                   oracle::Problem::DhReconstruct, oracle::Problem::IsolatedCliques}) {
        if (name == problem_name(p)) return p;
    }
    throw std::invalid_argument("unknown problem '" + name + "'");
}

const char* mode_name(RunMode m) {
    switch (m) {
    case RunMode::Sampled: return "sampled";
    case RunMode::ExactPath: return "exact_path";
    case RunMode::Classical: return "classical";
    }
    return "?";
}

RunMode parse_mode(const std::string& name) {
    for (auto m : {RunMode::Sampled, RunMode::ExactPath, RunMode::Classical}) {
        if (name == mode_name(m)) return m;
    }
    throw std::invalid_argument("unknown mode '" + name + "'");
}

const char* source_name(InputSource s) {
    switch (s) {
    case InputSource::Random: return "random";
    case InputSource::Exhaustive: return "exhaustive";
    case InputSource::File: return "file";
    }
    return "?";
}

InputSource parse_source(const std::string& name) {
    for (auto s : {InputSource::Random, InputSource::Exhaustive, InputSource::File}) {
        if (name == source_name(s)) return s;
    }
    throw std::invalid_argument("unknown input source '" + name + "'");
}

json config_record(const ExperimentConfig& config, const meq::ProtocolParams& params) {
    json rows = json::array();
    for (const auto& r : params.code.rows()) rows.push_back(r.to_string());
    return json{{"schema", kSchemaTag},
                {"record", "config"},
                {"problem", problem_name(config.problem)},
                {"k", config.k},
                {"n", params.n},
                {"d", config.d},
                {"delta", params.delta},
                {"epsilon", params.epsilon},
                {"t", params.copies},
                {"m", params.code.m()},
                {"depth_budget", params.depth_budget},
                {"mode", mode_name(config.mode)},
                {"source", source_name(config.source)},
                {"trials", config.trials},
                {"seed", config.seed},
                {"include_singletons", config.include_singletons},
                {"hard_qubit_cap", config.hard_qubit_cap},
                {"code_rows", std::move(rows)}};
}

json query_record(int trial, int index, const meq::TranscriptEntry& entry) {
    json rec{{"schema", kSchemaTag},
             {"record", "query"},
             {"trial", trial},
             {"index", index},
             {"form", entry.query.form == meq::MeqQuery::Form::Pair ? "pair" : "single"},
             {"i", entry.query.i},
             {"j", entry.query.form == meq::MeqQuery::Form::Pair ? json(entry.query.j)
                                                                 : json(nullptr)},
             {"y", entry.query.y.to_hex()},
             {"z", entry.query.z.to_hex()},
             {"outcome", entry.outcome},
             {"conditional_probability", entry.conditional_probability}};
    if (entry.initial_state_probability) {
        rec["initial_state_probability"] = *entry.initial_state_probability;
    }
    return rec;
}

json output_to_json(const meq::ProtocolOutput& output) {
    if (const bool* b = std::get_if<bool>(&output)) {
        return json{{"type", "bool"}, {"value", *b}};
    }
    if (const auto* n = std::get_if<std::uint64_t>(&output)) {
        return json{{"type", "count"}, {"value", *n}};
    }
    if (const auto* part = std::get_if<meq::Partition>(&output)) {
        return json{{"type", "partition"}, {"groups", part->groups}};
    }
    if (const auto* cl = std::get_if<meq::CliqueList>(&output)) {
        return json{{"type", "cliques"}, {"sets", cl->sets}};
    }
    const auto& dh = std::get<meq::DhOutput>(output);
    json steps = json::array();
    for (const auto& s : dh.decomp) {
        const char* kind = s.kind == meq::DecompStep::Kind::Pendant      ? "pendant"
                           : s.kind == meq::DecompStep::Kind::FalseTwin ? "false_twin"
                                                                         : "true_twin";
        steps.push_back(json::array({kind, s.removed, s.anchor}));
    }
    json adjacency = nullptr;
    if (dh.reconstructed) {
        json rows = json::array();
        for (const auto& r : dh.reconstructed->rows()) rows.push_back(r.to_string());
        adjacency = std::move(rows);
    }
    return json{{"type", "dh"},
                {"accepted", dh.accepted},
                {"decomp", std::move(steps)},
                {"base", dh.base_nodes},
                {"adjacency", std::move(adjacency)}};
}

bool output_matches(const meq::ProtocolOutput& got, const meq::ProtocolOutput& want) {
    const auto* got_dh = std::get_if<meq::DhOutput>(&got);
    const auto* want_dh = std::get_if<meq::DhOutput>(&want);
    if (got_dh != nullptr && want_dh != nullptr) {
        if (got_dh->accepted != want_dh->accepted) return false;
        if (!got_dh->accepted) return true;
        return got_dh->reconstructed == want_dh->reconstructed;
    }
    return got == want;
}

json trial_record(const TrialStats& stats) {
    return json{{"schema", kSchemaTag},
                {"record", "trial"},
                {"trial", stats.trial},
                {"output", output_to_json(stats.output)},
                {"oracle_output", output_to_json(stats.oracle_output)},
                {"match", stats.match},
                {"transcript_length", stats.transcript_length},
                {"exact_path_probability",
                 stats.exact_path_probability ? json(*stats.exact_path_probability)
                                              : json(nullptr)},
                {"gao_bound", stats.gao ? json(*stats.gao) : json(nullptr)},
                {"qubit_cost",
                 json{{"per_player", stats.cost.per_player_qubits},
                      {"total", stats.cost.total_qubits},
                      {"classical_bits", stats.cost.classical_bits}}}};
}

json summary_record(int trials, int matches, std::optional<double> analytic_error_bound) {
    double rate = trials > 0 ? 1.0 - static_cast<double>(matches) / trials : 0.0;
    return json{{"schema", kSchemaTag},
                {"record", "summary"},
                {"trials", trials},
                {"matches", matches},
                {"error_rate", rate},
                {"analytic_error_bound",
                 analytic_error_bound ? json(*analytic_error_bound) : json(nullptr)}};
}

json error_record(int trial, const std::string& message, int required_qubits, int cap) {
    return json{{"schema", kSchemaTag}, {"record", "error"},
                {"trial", trial},      {"message", message},
                {"required_qubits", required_qubits}, {"hard_cap", cap}};
}

namespace {

std::string require_fields(const json& rec, std::initializer_list<const char*> fields) {
    for (const char* f : fields) {
        if (!rec.contains(f)) {
            return std::string("missing field '") + f + "'";
        }
    }
    return "";
}

} // namespace

std::string validate_record(const json& record) {
    if (!record.is_object()) return "record is not an object";
    if (!record.contains("schema") || record["schema"] != kSchemaTag) {
        return "bad or missing schema tag";
    }
    if (!record.contains("record") || !record["record"].is_string()) {
        return "missing record type";
    }
    const std::string type = record["record"];
    if (type == "config") {
        return require_fields(record, {"problem", "k", "n", "delta", "epsilon", "t", "m",
                                       "depth_budget", "mode", "source", "trials", "seed",
                                       "code_rows"});
    }
    if (type == "query") {
        return require_fields(
            record, {"trial", "index", "form", "i", "j", "y", "z", "outcome",
                     "conditional_probability"});
    }
    if (type == "trial") {
        return require_fields(record, {"trial", "output", "oracle_output", "match",
                                       "transcript_length", "exact_path_probability",
                                       "gao_bound", "qubit_cost"});
    }
    if (type == "summary") {
        return require_fields(record, {"trials", "matches", "error_rate"});
    }
    if (type == "error") {
        return require_fields(record, {"trial", "message", "required_qubits", "hard_cap"});
    }
    return "unknown record type '" + type + "'";
}

} // namespace meqsim::harness
