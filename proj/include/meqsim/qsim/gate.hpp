#pragma once

#include <cstdint>
#include <vector>

namespace meqsim::qsim {

enum class GateKind {
    Hadamard,
    PauliX,
    Cnot,
    ControlledSwapBlock,
    MultiControlledX,
    DiagonalPhase,
};

// One gate over global qubit indices. Block operands (ControlledSwapBlock,
// DiagonalPhase) are contiguous qubit ranges given by offset and width.
// Every supported gate is self-inverse: DiagonalPhase entries are +-1 and
// the rest are permutation/butterfly gates, so a circuit is undone by
// replaying it in reverse.
struct Gate {
    GateKind kind = GateKind::Hadamard;
    int target = -1;            // Hadamard, PauliX, Cnot, MultiControlledX
    int control = -1;           // Cnot, ControlledSwapBlock
    std::vector<int> controls;  // MultiControlledX
    int block_a = -1;           // ControlledSwapBlock / DiagonalPhase offset
    int block_b = -1;           // ControlledSwapBlock second offset
    int width = 0;              // block width in qubits
    std::vector<std::int8_t> signs; // DiagonalPhase, 2^width entries of +-1

    static Gate hadamard(int q);
    static Gate pauli_x(int q);
    static Gate cnot(int control, int target);
    static Gate cswap_block(int control, int off_a, int off_b, int width);
    static Gate mcx(std::vector<int> controls, int target);
    static Gate diag_phase(int offset, int width, std::vector<std::int8_t> signs);

    Gate inverse() const { return *this; }

    // All qubit indices the gate acts on or is controlled by.
    std::vector<int> touched_qubits() const;
};

using Circuit = std::vector<Gate>;

} // namespace meqsim::qsim
