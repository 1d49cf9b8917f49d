#include "meqsim/meq/runner.hpp"

#include <algorithm>
#include <stdexcept>

namespace meqsim::meq {

Partition canonical_partition(std::vector<std::vector<int>> groups) {
    for (auto& g : groups) {
        std::sort(g.begin(), g.end());
    }
    std::sort(groups.begin(), groups.end());
    return Partition{std::move(groups)};
}

RunResult run_protocol(const ProtocolParams& params, QueryStrategy& strategy,
                       QueryAnswerer& answerer) {
    if (strategy.declared_depth() > params.depth_budget) {
        throw std::invalid_argument("run_protocol: strategy depth exceeds the budget D");
    }
    RunResult result;
    long long executed = 0;
    while (auto query = strategy.next_query()) {
        if (++executed > params.depth_budget) {
            throw std::runtime_error("run_protocol: strategy exceeded D queries");
        }
        query->validate(params.k, params.n);
        QueryResult qr = answerer.answer(*query);
        strategy.absorb(qr.outcome);
        result.transcript.push_back(TranscriptEntry{*query, qr.outcome, qr.probability, {}});
    }
    result.output = strategy.output();
    result.cost = qubit_cost(params, strategy.classical_side_bits());
    return result;
}

} // namespace meqsim::meq
