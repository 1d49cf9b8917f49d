#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>

namespace meqsim::kernels {

using cd = std::complex<double>;

// Inner loops over dense amplitude arrays of size 2^q. Every entry has a
// scalar reference implementation; the arithmetic-heavy ones also have an
// AVX2 variant. The permutation kernels (controlled_flip, cswap_blocks) are
// scalar in every table since they only move data. Backends are
// equivalence-tested against the scalar reference.
struct Table {
    // In-place Hadamard butterfly on qubit q.
    void (*hadamard)(cd* amps, std::size_t size, int q);

    // amps[i] *= signs[(i >> offset) & (2^width - 1)]; entries are +1/-1.
    void (*diag_phase)(cd* amps, std::size_t size, int offset, int width,
                       const std::int8_t* signs);

    // Swap amps[i] <-> amps[i | (1<<target)] for every i with target bit 0
    // and all bits of control_mask set. Mask 0 gives a plain X; a one-bit
    // mask gives CNOT.
    void (*controlled_flip)(cd* amps, std::size_t size, std::uint64_t control_mask,
                            int target);

    // Where the control bit is set, exchange the values of two equal-width
    // disjoint bit fields at off_a and off_b.
    void (*cswap_blocks)(cd* amps, std::size_t size, int control, int off_a,
                         int off_b, int width);

    double (*norm_sq)(const cd* amps, std::size_t size);

    // Probability mass on the half where qubit q reads 1.
    double (*prob_one)(const cd* amps, std::size_t size, int q);

    // Zero the branch where qubit q != bit and scale the survivor.
    void (*collapse)(cd* amps, std::size_t size, int q, int bit, double factor);

    void (*scale)(cd* amps, std::size_t size, double factor);

    // out[ib * na + ia] = b[ib] * a[ia].
    void (*tensor_product)(cd* out, const cd* a, std::size_t na, const cd* b,
                           std::size_t nb);

    const char* name;
};

enum class Backend { Scalar, Avx2 };

const Table& scalar_table();

// Table for an explicit backend, or nullptr if it is not usable on this
// CPU/build.
const Table* table_for(Backend backend);

// Best available backend unless one was forced.
const Table& active();

void force_backend(Backend backend);
void clear_forced_backend();

bool cpu_has_avx2();

} // namespace meqsim::kernels
