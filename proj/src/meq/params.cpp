#include "meqsim/meq/params.hpp"

#include <cmath>
#include <stdexcept>

namespace meqsim::meq {

int ProtocolParams::copies_for(double epsilon) {
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
        throw std::invalid_argument("copies_for: epsilon must lie in (0, 1)");
    }
    int t = static_cast<int>(std::ceil(std::log(1.0 / epsilon) / std::log(8.0 / 5.0)));
    if (t < 1) t = 1;
    while (std::pow(0.625, t) > epsilon) ++t;
    return t;
}

ProtocolParams ProtocolParams::derive(int n, int k, int depth_budget, double delta,
                                      fingerprint::LinearCode code) {
    if (depth_budget < 1) {
        throw std::invalid_argument("ProtocolParams: D must be >= 1");
    }
    const double epsilon = delta / (4.0 * depth_budget);
    ProtocolParams p{n,       k, depth_budget,    delta,
                     epsilon, copies_for(epsilon), std::move(code), {}};
    p.validate();
    return p;
}

ProtocolParams ProtocolParams::with_copies(int n, int k, int depth_budget, int copies,
                                           fingerprint::LinearCode code) {
    if (copies < 1) {
        throw std::invalid_argument("with_copies: t must be >= 1");
    }
    if (depth_budget < 1) {
        throw std::invalid_argument("ProtocolParams: D must be >= 1");
    }
    const double epsilon = std::pow(0.625, copies);
    ProtocolParams p{n,       k,      depth_budget,    4.0 * depth_budget * epsilon,
                     epsilon, copies, std::move(code), {}};
    p.validate();
    return p;
}

void ProtocolParams::validate() const {
    if (n < 1) throw std::invalid_argument("ProtocolParams: n must be >= 1");
    if (k < 1) throw std::invalid_argument("ProtocolParams: k must be >= 1");
    if (depth_budget < 1) throw std::invalid_argument("ProtocolParams: D must be >= 1");
    if (!(epsilon > 0.0) || !(epsilon < 1.0)) {
        throw std::invalid_argument("ProtocolParams: epsilon must lie in (0, 1)");
    }
    if (copies < 1 || std::pow(0.625, copies) > epsilon) {
        throw std::invalid_argument("ProtocolParams: (5/8)^t must not exceed epsilon");
    }
    if (code.n() != n) {
        throw std::invalid_argument("ProtocolParams: code message length != n");
    }
}

CostReport qubit_cost(const ProtocolParams& params, long long classical_bits) {
    CostReport r;
    r.per_player_qubits = params.copies * params.code.copy_width();
    r.total_qubits = static_cast<long long>(params.k) * r.per_player_qubits;
    r.classical_bits = classical_bits;
    return r;
}

} // namespace meqsim::meq
