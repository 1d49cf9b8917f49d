#pragma once

#include <iosfwd>
#include <vector>

#include "meqsim/harness/config.hpp"

namespace meqsim::harness {

// Executes the configured trials and writes one JSON record per line:
// config, then per-trial query and trial records, then a summary. Returns 0
// when every trial ran and matched the oracle.
int cmd_run(const ExperimentConfig& config, std::ostream& report);

struct CostGrid {
    std::vector<int> k_values{3};
    std::vector<int> n_values{};      // empty: n = k
    std::vector<double> deltas{0.1};
    int d = 1;                        // moment order / isolation slack
    int m_override = 0;
};

// Tabulates the error budget, copy counts, and qubit costs across the grid,
// one row per problem and parameter point, plus the bounded-distance
// subquery depths.
int cmd_cost(const CostGrid& grid, std::ostream& out);

// Fixed-seed invariant suite over every module; one line per suite, nonzero
// exit on any failure.
int cmd_selftest(std::ostream& out);

} // namespace meqsim::harness
