#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "meqsim/qsim/state_vector.hpp"

namespace meqsim::qsim {

struct Block {
    int offset;
    int width;
};

// Named, contiguous, pairwise-disjoint qubit ranges covering [0, num_qubits).
class RegisterLayout {
public:
    // Appends a block directly after the existing ones.
    int append_block(std::string name, int width);

    const Block& block(std::string_view name) const;
    bool has_block(std::string_view name) const;
    int num_qubits() const { return next_offset_; }
    const std::vector<std::pair<std::string, Block>>& blocks() const { return blocks_; }

private:
    std::vector<std::pair<std::string, Block>> blocks_;
    int next_offset_ = 0;
};

struct QubitCaps {
    int soft = 26; // warn when a single factor first exceeds this
    int hard = 28; // refuse to materialize a larger factor
};

// A register of num_qubits qubits stored as a product of dense factors.
// Blocks that were never joined by a shared gate stay in separate factors;
// the first joint gate merges them. Caps apply to individual factors, not
// to the register as a whole.
class FactoredRegister {
public:
    explicit FactoredRegister(int num_qubits, QubitCaps caps = {});

    int num_qubits() const { return static_cast<int>(where_.size()); }
    int num_factors() const { return static_cast<int>(factors_.size()); }
    int largest_factor_width() const;

    // Replaces the (currently untouched, single-qubit) factors of a
    // contiguous range with the given state. Used for initialization.
    void load_block(int offset, const StateVector& state);

    void apply(const Gate& gate);
    void apply(const Circuit& circuit);

    std::pair<double, double> qubit_probabilities(int q) const;
    Outcome measure_qubit(int q, Rng& rng);
    double project_qubit(int q, int bit);
    Outcome projective_2outcome(const Circuit& circuit, int s_qubit, Rng& rng);
    Outcome projective_2outcome_forced(const Circuit& circuit, int s_qubit, int bit);

    // Product of all factor norms.
    double norm() const;

    // Dense state over the given globally-indexed qubits, ordered so that
    // the smallest listed qubit is bit 0. Every factor overlapping the set
    // must lie entirely inside it.
    StateVector dense_over(std::vector<int> qubits) const;

    // Global qubits sharing a factor with q, sorted.
    std::vector<int> factor_qubits(int q) const;

private:
    struct Factor {
        StateVector state;
        std::vector<int> qubits; // qubits[local] = global index
    };

    int local_index(int factor, int global) const;
    // Ensures all touched qubits live in one factor; returns its id.
    int merge_for(const std::vector<int>& touched);
    void merge_two(int into, int from);
    Gate relocate(const Gate& gate, int factor) const;
    void check_qubit(int q) const;

    std::vector<Factor> factors_;
    std::vector<std::pair<int, int>> where_; // global -> (factor, local)
    QubitCaps caps_;
    bool soft_cap_warned_ = false;
};

// Tensor product of named local states in declared order; the first block
// occupies the lowest qubits. Errors on duplicate names.
std::pair<StateVector, RegisterLayout>
tensor_init(const std::vector<std::pair<std::string, StateVector>>& blocks);

} // namespace meqsim::qsim
