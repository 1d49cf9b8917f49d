#pragma once

#include "meqsim/meq/answerer.hpp"
#include "meqsim/meq/params.hpp"
#include "meqsim/meq/strategy.hpp"

namespace meqsim::meq {

struct RunResult {
    ProtocolOutput output;
    Transcript transcript;
    CostReport cost;
};

// Drives the strategy against the answerer: asks for the next query,
// executes it, feeds the outcome back, and stops at the strategy's output.
// Throws if the strategy exceeds the depth budget.
RunResult run_protocol(const ProtocolParams& params, QueryStrategy& strategy,
                       QueryAnswerer& answerer);

} // namespace meqsim::meq
