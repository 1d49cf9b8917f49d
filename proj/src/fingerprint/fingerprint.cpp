#include "meqsim/fingerprint/fingerprint.hpp"

#include <stdexcept>

namespace meqsim::fingerprint {

std::vector<std::int8_t> phase_signs(const BitString& codeword) {
    std::vector<std::int8_t> signs(static_cast<std::size_t>(codeword.size()));
    for (int j = 0; j < codeword.size(); ++j) {
        signs[static_cast<std::size_t>(j)] = codeword.bit(j) ? -1 : 1;
    }
    return signs;
}

qsim::Circuit prep_circuit(const LinearCode& code, const BitString& x, qsim::Block block) {
    if (block.width != code.copy_width()) {
        throw std::invalid_argument("prep_circuit: block width != log2(m)");
    }
    qsim::Circuit gates;
    gates.reserve(static_cast<std::size_t>(block.width) + 1);
    for (int q = 0; q < block.width; ++q) {
        gates.push_back(qsim::Gate::hadamard(block.offset + q));
    }
    gates.push_back(
        qsim::Gate::diag_phase(block.offset, block.width, phase_signs(code.encode(x))));
    return gates;
}

qsim::Gate modifier_gate(const LinearCode& code, const BitString& y, qsim::Block block) {
    if (block.width != code.copy_width()) {
        throw std::invalid_argument("modifier_gate: block width != log2(m)");
    }
    return qsim::Gate::diag_phase(block.offset, block.width, phase_signs(code.encode(y)));
}

qsim::StateVector prepared_fingerprint(const LinearCode& code, const BitString& x) {
    qsim::StateVector st(code.copy_width());
    st.apply(prep_circuit(code, x, qsim::Block{0, code.copy_width()}));
    return st;
}

} // namespace meqsim::fingerprint
