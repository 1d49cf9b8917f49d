#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "meqsim/qsim/state_vector.hpp"
#include "meqsim/rng.hpp"

namespace testutil {

using meqsim::qsim::cd;

inline std::vector<cd> random_amplitudes(std::size_t size, meqsim::Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<cd> amps(size);
    double norm_sq = 0.0;
    for (auto& a : amps) {
        a = cd{gauss(rng), gauss(rng)};
        norm_sq += std::norm(a);
    }
    double inv = 1.0 / std::sqrt(norm_sq);
    for (auto& a : amps) a *= inv;
    return amps;
}

inline meqsim::qsim::StateVector random_state(int num_qubits, meqsim::Rng& rng) {
    return meqsim::qsim::StateVector::from_amplitudes(
        random_amplitudes(std::size_t{1} << num_qubits, rng));
}

inline double max_abs_diff(const std::vector<cd>& a, const std::vector<cd>& b) {
    double worst = a.size() == b.size() ? 0.0 : 1e300;
    for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
        worst = std::max(worst, std::abs(a[i] - b[i]));
    }
    return worst;
}

inline double max_abs_diff(const meqsim::qsim::StateVector& a,
                           const meqsim::qsim::StateVector& b) {
    auto sa = a.amplitudes();
    auto sb = b.amplitudes();
    double worst = sa.size() == sb.size() ? 0.0 : 1e300;
    for (std::size_t i = 0; i < sa.size() && i < sb.size(); ++i) {
        worst = std::max(worst, std::abs(sa[i] - sb[i]));
    }
    return worst;
}

} // namespace testutil
