#pragma once

#include "meqsim/fingerprint/linear_code.hpp"
#include "meqsim/qsim/register.hpp"
#include "meqsim/qsim/state_vector.hpp"

namespace meqsim::fingerprint {

// The fingerprint of x is the copy_width()-qubit state
//   (1/sqrt(m)) * sum_j (-1)^{E(x)_j} |j>.

// Phase signs (-1)^{w_j} for an m-bit codeword w.
std::vector<std::int8_t> phase_signs(const BitString& codeword);

// Gates preparing the fingerprint of x on an all-zero block: a Hadamard on
// every block qubit, then the codeword phase.
qsim::Circuit prep_circuit(const LinearCode& code, const BitString& x, qsim::Block block);

// Single diagonal phase mapping any prepared fingerprint of x to the
// fingerprint of x^y. Self-inverse.
qsim::Gate modifier_gate(const LinearCode& code, const BitString& y, qsim::Block block);

// Dense single-copy fingerprint state, mainly for tests and oracles.
qsim::StateVector prepared_fingerprint(const LinearCode& code, const BitString& x);

} // namespace meqsim::fingerprint
