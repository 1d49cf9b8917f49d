#include "meqsim/qsim/gate.hpp"

#include <stdexcept>

namespace meqsim::qsim {

Gate Gate::hadamard(int q) {
    Gate g;
    g.kind = GateKind::Hadamard;
    g.target = q;
    return g;
}

Gate Gate::pauli_x(int q) {
    Gate g;
    g.kind = GateKind::PauliX;
    g.target = q;
    return g;
}

Gate Gate::cnot(int control, int target) {
    if (control == target) {
        throw std::invalid_argument("cnot: control equals target");
    }
    Gate g;
    g.kind = GateKind::Cnot;
    g.control = control;
    g.target = target;
    return g;
}

Gate Gate::cswap_block(int control, int off_a, int off_b, int width) {
    if (width <= 0) {
        throw std::invalid_argument("cswap_block: width must be positive");
    }
    bool overlap = off_a < off_b ? off_a + width > off_b : off_b + width > off_a;
    if (overlap) {
        throw std::invalid_argument("cswap_block: blocks overlap");
    }
    if ((control >= off_a && control < off_a + width) ||
        (control >= off_b && control < off_b + width)) {
        throw std::invalid_argument("cswap_block: control inside a swapped block");
    }
    Gate g;
    g.kind = GateKind::ControlledSwapBlock;
    g.control = control;
    g.block_a = off_a;
    g.block_b = off_b;
    g.width = width;
    return g;
}

Gate Gate::mcx(std::vector<int> controls, int target) {
    if (controls.empty()) {
        throw std::invalid_argument("mcx: needs at least one control");
    }
    for (int c : controls) {
        if (c == target) {
            throw std::invalid_argument("mcx: control equals target");
        }
    }
    Gate g;
    g.kind = GateKind::MultiControlledX;
    g.controls = std::move(controls);
    g.target = target;
    return g;
}

Gate Gate::diag_phase(int offset, int width, std::vector<std::int8_t> signs) {
    if (width <= 0 || width >= 63) {
        throw std::invalid_argument("diag_phase: bad width");
    }
    if (signs.size() != (std::size_t{1} << width)) {
        throw std::invalid_argument("diag_phase: sign vector length != 2^width");
    }
    for (std::int8_t s : signs) {
        if (s != 1 && s != -1) {
            throw std::invalid_argument("diag_phase: entries must be +-1");
        }
    }
    Gate g;
    g.kind = GateKind::DiagonalPhase;
    g.block_a = offset;
    g.width = width;
    g.signs = std::move(signs);
    return g;
}

std::vector<int> Gate::touched_qubits() const {
    std::vector<int> qs;
    switch (kind) {
    case GateKind::Hadamard:
    case GateKind::PauliX:
        qs.push_back(target);
        break;
    case GateKind::Cnot:
        qs.push_back(control);
        qs.push_back(target);
        break;
    case GateKind::ControlledSwapBlock:
        qs.push_back(control);
        for (int i = 0; i < width; ++i) {
            qs.push_back(block_a + i);
            qs.push_back(block_b + i);
        }
        break;
    case GateKind::MultiControlledX:
        qs = controls;
        qs.push_back(target);
        break;
    case GateKind::DiagonalPhase:
        for (int i = 0; i < width; ++i) {
            qs.push_back(block_a + i);
        }
        break;
    }
    return qs;
}

} // namespace meqsim::qsim
