#pragma once

#include <cstdint>
#include <string>

#include "meqsim/oracle/oracle.hpp"

namespace meqsim::harness {

enum class RunMode { Sampled, ExactPath, Classical };
enum class InputSource { Random, Exhaustive, File };

// Everything one experiment depends on. The seed fully determines code
// sampling, input generation, and measurement sampling; equal configs give
// byte-identical reports.
struct ExperimentConfig {
    oracle::Problem problem = oracle::Problem::GroupByEq;
    int k = 3;
    int n = 2;
    int d = 1; // frequency-moment order p / isolated-cliques slack d
    double delta = 0.1;
    RunMode mode = RunMode::Classical;
    InputSource source = InputSource::Random;
    int trials = 1;
    std::uint64_t seed = 1;
    int m_override = 0; // 0: default code width for n
    std::string input_path;
    bool include_singletons = true;
    int soft_qubit_cap = 26;
    int hard_qubit_cap = 28;
};

const char* problem_name(oracle::Problem p);
oracle::Problem parse_problem(const std::string& name);
const char* mode_name(RunMode m);
RunMode parse_mode(const std::string& name);
const char* source_name(InputSource s);
InputSource parse_source(const std::string& name);

} // namespace meqsim::harness
