#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "meqsim/harness/report.hpp"
#include "meqsim/harness/runner.hpp"

using namespace meqsim;

namespace {

int env_hard_cap(int fallback) {
    if (const char* v = std::getenv("MEQSIM_HARD_QUBIT_CAP")) {
        try {
            return std::stoi(v);
        } catch (...) {
            std::cerr << "meqsim: ignoring bad MEQSIM_HARD_QUBIT_CAP\n";
        }
    }
    return fallback;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simulator and verification harness for fingerprint-based "
                 "simultaneous message-passing protocols"};
    app.set_config("--config", "", "Read options from a config file");
    app.require_subcommand(1);

    harness::ExperimentConfig cfg;
    cfg.hard_qubit_cap = env_hard_cap(cfg.hard_qubit_cap);
    std::string problem = "group_by_eq";
    std::string mode = "classical";
    std::string source = "random";
    std::string output_path;

    auto* run = app.add_subcommand("run", "Execute protocol trials and write a JSONL report");
    run->add_option("--problem", problem,
                    "group_by_eq | all_eq | exists_eq | frequency_moment | p3_freeness | "
                    "neighborhood_diversity | dh_reconstruct | isolated_cliques");
    run->add_option("--k", cfg.k, "Number of players / graph nodes");
    run->add_option("--n", cfg.n, "Input length in bits (graph problems force n = k)");
    run->add_option("--d", cfg.d, "Frequency-moment order p or isolation slack d");
    run->add_option("--delta", cfg.delta, "Target end-to-end error probability");
    run->add_option("--mode", mode, "sampled | exact_path | classical");
    run->add_option("--trials", cfg.trials, "Trial count (exhaustive source overrides)");
    run->add_option("--seed", cfg.seed, "Master seed; fixes code, inputs, measurements");
    run->add_option("--m", cfg.m_override, "Codeword length override (power of two)");
    run->add_option("--input", cfg.input_path, "Input file (source=file)");
    run->add_option("--source", source, "random | exhaustive | file");
    run->add_option("--output", output_path, "Report path (default stdout)");
    run->add_flag("--include-singletons,!--no-include-singletons", cfg.include_singletons,
                  "List single nodes as isolated cliques (default on)");
    run->add_option("--hard-qubit-cap", cfg.hard_qubit_cap,
                    "Refuse to materialize factors above this width");

    harness::CostGrid grid;
    auto* cost = app.add_subcommand("cost", "Tabulate depths, copies, and qubit costs");
    cost->add_option("--k", grid.k_values, "Player counts")->delimiter(',');
    cost->add_option("--n", grid.n_values, "Input lengths (string problems)")->delimiter(',');
    cost->add_option("--delta", grid.deltas, "Error targets")->delimiter(',');
    cost->add_option("--d", grid.d, "Moment order / isolation slack");
    cost->add_option("--m", grid.m_override, "Codeword length override");

    auto* selftest =
        app.add_subcommand("selftest", "Run the fixed-seed invariant suite of every module");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            cfg.problem = harness::parse_problem(problem);
            cfg.mode = harness::parse_mode(mode);
            cfg.source = harness::parse_source(source);
            if (!cfg.input_path.empty()) cfg.source = harness::InputSource::File;
            if (!output_path.empty()) {
                std::ofstream out(output_path);
                if (!out) {
                    std::cerr << "meqsim: cannot open " << output_path << "\n";
                    return 2;
                }
                return harness::cmd_run(cfg, out);
            }
            return harness::cmd_run(cfg, std::cout);
        }
        if (cost->parsed()) {
            return harness::cmd_cost(grid, std::cout);
        }
        if (selftest->parsed()) {
            return harness::cmd_selftest(std::cout);
        }
    } catch (const std::exception& e) {
        std::cerr << "meqsim: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
