#include "meqsim/qsim/state_vector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

#include "meqsim/errors.hpp"
#include "meqsim/kernels/kernels.hpp"

namespace meqsim::qsim {

namespace {
const kernels::Table& K() { return kernels::active(); }
} // namespace

StateVector::StateVector(int num_qubits) : num_qubits_(num_qubits) {
    if (num_qubits < 1 || num_qubits > 40) {
        throw std::invalid_argument("StateVector: qubit count out of range");
    }
    amps_.assign(std::size_t{1} << num_qubits, cd{0.0, 0.0});
    amps_[0] = cd{1.0, 0.0};
}

StateVector StateVector::basis(int num_qubits, std::uint64_t index) {
    StateVector st(num_qubits);
    if (index >= st.dim()) {
        throw std::out_of_range("StateVector::basis: index out of range");
    }
    st.amps_[0] = cd{0.0, 0.0};
    st.amps_[index] = cd{1.0, 0.0};
    return st;
}

StateVector StateVector::from_amplitudes(std::vector<cd> amps) {
    if (amps.size() < 2 || !std::has_single_bit(amps.size())) {
        throw std::invalid_argument("StateVector: amplitude count must be a power of two >= 2");
    }
    StateVector st(std::countr_zero(amps.size()));
    st.amps_ = std::move(amps);
    return st;
}

double StateVector::norm() const {
    return std::sqrt(K().norm_sq(amps_.data(), amps_.size()));
}

void StateVector::check_qubit(int q) const {
    if (q < 0 || q >= num_qubits_) {
        throw std::out_of_range("qubit index out of range");
    }
}

void StateVector::check_gate(const Gate& gate) const {
    for (int q : gate.touched_qubits()) {
        check_qubit(q);
    }
}

void StateVector::apply(const Gate& gate) {
    check_gate(gate);
    cd* a = amps_.data();
    const std::size_t n = amps_.size();
    switch (gate.kind) {
    case GateKind::Hadamard:
        K().hadamard(a, n, gate.target);
        break;
    case GateKind::PauliX:
        K().controlled_flip(a, n, 0, gate.target);
        break;
    case GateKind::Cnot:
        K().controlled_flip(a, n, std::uint64_t{1} << gate.control, gate.target);
        break;
    case GateKind::MultiControlledX: {
        std::uint64_t mask = 0;
        for (int c : gate.controls) mask |= std::uint64_t{1} << c;
        K().controlled_flip(a, n, mask, gate.target);
        break;
    }
    case GateKind::ControlledSwapBlock:
        K().cswap_blocks(a, n, gate.control, gate.block_a, gate.block_b, gate.width);
        break;
    case GateKind::DiagonalPhase:
        K().diag_phase(a, n, gate.block_a, gate.width, gate.signs.data());
        break;
    }
}

void StateVector::apply(const Circuit& circuit) {
    for (const Gate& g : circuit) {
        apply(g);
    }
}

void StateVector::apply_phase_on_bits(const std::vector<int>& bit_positions,
                                      const std::vector<std::int8_t>& signs) {
    if (signs.size() != (std::size_t{1} << bit_positions.size())) {
        throw std::invalid_argument("apply_phase_on_bits: sign vector length mismatch");
    }
    for (int b : bit_positions) check_qubit(b);
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        std::size_t idx = 0;
        for (std::size_t j = 0; j < bit_positions.size(); ++j) {
            idx |= ((i >> bit_positions[j]) & 1) << j;
        }
        if (signs[idx] < 0) amps_[i] = -amps_[i];
    }
}

std::pair<double, double> StateVector::qubit_probabilities(int q) const {
    check_qubit(q);
    double p1 = K().prob_one(amps_.data(), amps_.size(), q);
    double p0 = K().norm_sq(amps_.data(), amps_.size()) - p1;
    if (p0 < 0.0) p0 = 0.0;
    return {p0, p1};
}

Outcome StateVector::measure_qubit(int q, Rng& rng) {
    auto [p0, p1] = qubit_probabilities(q);
    if (p0 < kNullBranchTol && p1 < kNullBranchTol) {
        throw std::runtime_error("measure_qubit: state is numerically invalid");
    }
    int bit = uniform_real(rng) * (p0 + p1) < p0 ? 0 : 1;
    double p = bit ? p1 : p0;
    K().collapse(amps_.data(), amps_.size(), q, bit, 1.0 / std::sqrt(p));
    return {bit, p};
}

double StateVector::project_qubit(int q, int bit) {
    auto [p0, p1] = qubit_probabilities(q);
    double p = bit ? p1 : p0;
    if (p < kNullBranchTol) {
        throw NullBranchError("project_qubit: branch probability below 1e-12");
    }
    K().collapse(amps_.data(), amps_.size(), q, bit, 1.0 / std::sqrt(p));
    return p;
}

Outcome StateVector::projective_2outcome(const Circuit& circuit, int s_qubit, Rng& rng) {
    apply(circuit);
    Outcome out = measure_qubit(s_qubit, rng);
    for (auto it = circuit.rbegin(); it != circuit.rend(); ++it) {
        apply(it->inverse());
    }
    return out;
}

Outcome StateVector::projective_2outcome_forced(const Circuit& circuit, int s_qubit, int bit) {
    apply(circuit);
    double p = project_qubit(s_qubit, bit);
    for (auto it = circuit.rbegin(); it != circuit.rend(); ++it) {
        apply(it->inverse());
    }
    return {bit, p};
}

cd inner_product(const StateVector& a, const StateVector& b) {
    if (a.num_qubits_ != b.num_qubits_) {
        throw std::invalid_argument("inner_product: qubit count mismatch");
    }
    cd total{0.0, 0.0};
    for (std::size_t i = 0; i < a.amps_.size(); ++i) {
        total += std::conj(a.amps_[i]) * b.amps_[i];
    }
    return total;
}

} // namespace meqsim::qsim
