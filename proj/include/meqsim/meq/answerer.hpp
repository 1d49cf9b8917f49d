#pragma once

#include <memory>

#include "meqsim/meq/engine.hpp"
#include "meqsim/meq/query.hpp"

namespace meqsim::meq {

// One query-answering interface for every execution mode, so protocol logic
// can be exercised at sizes where no statevector fits.
class QueryAnswerer {
public:
    virtual ~QueryAnswerer() = default;
    virtual QueryResult answer(const MeqQuery& query) = 0;
};

// Samples each query's projective measurement on the persistent register.
class QuantumSampledAnswerer : public QueryAnswerer {
public:
    QuantumSampledAnswerer(const ProtocolParams& params, std::vector<BitString> inputs,
                           Rng rng)
        : reg_(params, std::move(inputs)), rng_(rng) {}

    QueryResult answer(const MeqQuery& query) override {
        return execute_query(reg_, query, rng_);
    }

    GlobalRegister& global_register() { return reg_; }

private:
    GlobalRegister reg_;
    Rng rng_;
};

// Force-projects every query onto the outcome a reference answerer (the
// classical oracle) expects, and reports the exact conditional probability
// of that branch.
class QuantumExactPathAnswerer : public QueryAnswerer {
public:
    QuantumExactPathAnswerer(const ProtocolParams& params, std::vector<BitString> inputs,
                             QueryAnswerer& expected)
        : reg_(params, std::move(inputs)), expected_(expected) {}

    QueryResult answer(const MeqQuery& query) override {
        int bit = expected_.answer(query).outcome;
        return execute_query_forced(reg_, query, bit);
    }

    GlobalRegister& global_register() { return reg_; }

private:
    GlobalRegister reg_;
    QueryAnswerer& expected_;
};

} // namespace meqsim::meq
