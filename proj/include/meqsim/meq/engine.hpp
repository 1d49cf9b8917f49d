#pragma once

#include <span>
#include <string>
#include <vector>

#include "meqsim/meq/params.hpp"
#include "meqsim/meq/query.hpp"
#include "meqsim/qsim/register.hpp"

namespace meqsim::meq {

// The referee's whole quantum memory: per player, t fingerprint copies of
// that player's input; a referee-owned block of t copies used to synthesize
// target fingerprints for single-player queries; and the swap-test ancillas
// s_1..s_t plus the accept qubit s. Ancillas and the referee block start at
// |0> and are shared by every query.
class GlobalRegister {
public:
    GlobalRegister(const ProtocolParams& params, std::vector<BitString> inputs);

    const ProtocolParams& params() const { return params_; }
    const std::vector<BitString>& inputs() const { return inputs_; }
    const qsim::RegisterLayout& layout() const { return layout_; }
    qsim::FactoredRegister& state() { return reg_; }
    const qsim::FactoredRegister& state() const { return reg_; }

    qsim::Block player_copy(int player, int copy) const;
    qsim::Block referee_copy(int copy) const;
    int swap_ancilla(int copy) const; // s_r qubit
    int accept_qubit() const;         // s qubit

    static std::string player_copy_name(int player, int copy);
    static std::string referee_copy_name(int copy);

private:
    ProtocolParams params_;
    std::vector<BitString> inputs_;
    qsim::RegisterLayout layout_;
    qsim::FactoredRegister reg_;
};

// The unitary U of one query's 2-outcome measurement: optional modifier
// phases, one swap test per copy (outcome 1 left in s_r), and the AND of
// s_1..s_t written into s. For single-player queries the target fingerprints
// are first synthesized on the referee block.
qsim::Circuit build_query_circuit(const ProtocolParams& params,
                                  const qsim::RegisterLayout& layout,
                                  const MeqQuery& query);

struct QueryResult {
    int outcome = 0;        // 1 means "equal"
    double probability = 0; // conditional probability of this outcome
};

// Runs the query as a projective measurement (apply U, measure s, undo U)
// on the persistent register.
QueryResult execute_query(GlobalRegister& reg, const MeqQuery& query, Rng& rng);
QueryResult execute_query_forced(GlobalRegister& reg, const MeqQuery& query,
                                 int expected_outcome);

// Probability that the query, measured on a fresh register over the same
// inputs, yields the given outcome. Never throws on a null branch; may
// return 0.
double query_outcome_probability(const ProtocolParams& params,
                                 const std::vector<BitString>& inputs,
                                 const MeqQuery& query, int outcome);

// For each transcript entry, the fresh-register probability of its recorded
// outcome.
std::vector<double> initial_state_probs(const ProtocolParams& params,
                                        const std::vector<BitString>& inputs,
                                        const Transcript& transcript);

// 1 - 4 * sum(1 - p_i), clamped below at 0: the sequential-measurement
// success bound from the per-query initial-state probabilities.
double gao_bound(std::span<const double> initial_probs);

} // namespace meqsim::meq
