#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "meqsim/qsim/gate.hpp"
#include "meqsim/rng.hpp"

namespace meqsim::qsim {

using cd = std::complex<double>;

inline constexpr double kNormTol = 1e-9;
// Below this, a measurement branch counts as numerically null.
inline constexpr double kNullBranchTol = 1e-12;

struct Outcome {
    int bit;
    double probability;
};

// Dense statevector over num_qubits qubits. Qubit q is bit q of the
// amplitude index (little-endian), so basis index 5 on three qubits means
// qubits 0 and 2 read 1. All mutating operations preserve unit norm.
class StateVector {
public:
    explicit StateVector(int num_qubits); // |0...0>
    static StateVector basis(int num_qubits, std::uint64_t index);
    static StateVector from_amplitudes(std::vector<cd> amps);

    int num_qubits() const { return num_qubits_; }
    std::size_t dim() const { return amps_.size(); }
    std::span<const cd> amplitudes() const { return amps_; }
    cd amplitude(std::uint64_t i) const { return amps_.at(i); }

    double norm() const;

    void apply(const Gate& gate);
    void apply(const Circuit& circuit);

    // Phase whose sign index gathers the listed bit positions (position j
    // contributes 2^j to the index). Equivalent to DiagonalPhase when the
    // positions are consecutive.
    void apply_phase_on_bits(const std::vector<int>& bit_positions,
                             const std::vector<std::int8_t>& signs);

    // Exact Born probabilities (p0, p1) for qubit q.
    std::pair<double, double> qubit_probabilities(int q) const;

    // Samples qubit q, collapses it, renormalizes. The reported probability
    // is the exact Born probability of the sampled bit.
    Outcome measure_qubit(int q, Rng& rng);

    // Forces qubit q to the given bit without sampling; returns the exact
    // branch probability. Throws NullBranchError on a near-null branch.
    double project_qubit(int q, int bit);

    // Applies circuit, measures (or forces) s_qubit, then undoes the
    // circuit: the projective form of the 2-outcome measurement defined by
    // the circuit.
    Outcome projective_2outcome(const Circuit& circuit, int s_qubit, Rng& rng);
    Outcome projective_2outcome_forced(const Circuit& circuit, int s_qubit, int bit);

    friend cd inner_product(const StateVector& a, const StateVector& b);

private:
    void check_qubit(int q) const;
    void check_gate(const Gate& gate) const;

    int num_qubits_;
    std::vector<cd> amps_;
};

cd inner_product(const StateVector& a, const StateVector& b);

} // namespace meqsim::qsim
