#pragma once

#include "meqsim/fingerprint/linear_code.hpp"
#include "meqsim/qsim/register.hpp"

namespace meqsim::meq {

// Error/amplification budget of one compiled protocol run: per-query error
// epsilon = delta / (4 * depth_budget), and t fingerprint copies per player
// with t minimal such that (5/8)^t <= epsilon.
struct ProtocolParams {
    int n = 0;            // input length in bits
    int k = 0;            // number of players
    int depth_budget = 0; // maximum query count D
    double delta = 0.0;   // target end-to-end error
    double epsilon = 0.0; // per-query error
    int copies = 0;       // fingerprint copies per player (t)
    fingerprint::LinearCode code;
    qsim::QubitCaps caps;

    // Minimal t with (5/8)^t <= epsilon.
    static int copies_for(double epsilon);

    static ProtocolParams derive(int n, int k, int depth_budget, double delta,
                                 fingerprint::LinearCode code);

    // Pins t directly; delta is back-filled as 4 * D * (5/8)^t.
    static ProtocolParams with_copies(int n, int k, int depth_budget, int copies,
                                      fingerprint::LinearCode code);

    void validate() const;
};

struct CostReport {
    int per_player_qubits = 0;      // t * log2(m)
    long long total_qubits = 0;     // k * t * log2(m)
    long long classical_bits = 0;   // strategy side data (degrees etc.)
};

CostReport qubit_cost(const ProtocolParams& params, long long classical_bits = 0);

} // namespace meqsim::meq
