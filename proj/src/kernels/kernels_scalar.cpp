#include "meqsim/kernels/kernels.hpp"

#include <cmath>

namespace meqsim::kernels {

namespace scalar {

void hadamard(cd* amps, std::size_t size, int q) {
    const std::size_t stride = std::size_t{1} << q;
    const double s = M_SQRT1_2;
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            const cd a = amps[i];
            const cd b = amps[i + stride];
            amps[i] = (a + b) * s;
            amps[i + stride] = (a - b) * s;
        }
    }
}

void diag_phase(cd* amps, std::size_t size, int offset, int width,
                const std::int8_t* signs) {
    const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
    for (std::size_t i = 0; i < size; ++i) {
        if (signs[(i >> offset) & mask] < 0) {
            amps[i] = -amps[i];
        }
    }
}

void controlled_flip(cd* amps, std::size_t size, std::uint64_t control_mask,
                     int target) {
    const std::size_t tbit = std::size_t{1} << target;
    for (std::size_t i = 0; i < size; ++i) {
        if ((i & tbit) == 0 && (i & control_mask) == control_mask) {
            std::swap(amps[i], amps[i | tbit]);
        }
    }
}

void cswap_blocks(cd* amps, std::size_t size, int control, int off_a, int off_b,
                  int width) {
    const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
    const std::size_t cbit = std::size_t{1} << control;
    for (std::size_t i = 0; i < size; ++i) {
        if ((i & cbit) == 0) continue;
        const std::uint64_t a = (i >> off_a) & mask;
        const std::uint64_t b = (i >> off_b) & mask;
        if (a < b) {
            const std::uint64_t d = a ^ b;
            const std::size_t j = i ^ (d << off_a) ^ (d << off_b);
            std::swap(amps[i], amps[j]);
        }
    }
}

double norm_sq(const cd* amps, std::size_t size) {
    double total = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
        total += amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
    }
    return total;
}

double prob_one(const cd* amps, std::size_t size, int q) {
    const std::size_t stride = std::size_t{1} << q;
    double total = 0.0;
    for (std::size_t base = stride; base < size; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; ++i) {
            total += amps[i].real() * amps[i].real() + amps[i].imag() * amps[i].imag();
        }
    }
    return total;
}

void collapse(cd* amps, std::size_t size, int q, int bit, double factor) {
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        std::size_t keep = bit ? base + stride : base;
        std::size_t kill = bit ? base : base + stride;
        for (std::size_t i = 0; i < stride; ++i) {
            amps[keep + i] *= factor;
            amps[kill + i] = cd{0.0, 0.0};
        }
    }
}

void scale(cd* amps, std::size_t size, double factor) {
    for (std::size_t i = 0; i < size; ++i) {
        amps[i] *= factor;
    }
}

void tensor_product(cd* out, const cd* a, std::size_t na, const cd* b,
                    std::size_t nb) {
    for (std::size_t ib = 0; ib < nb; ++ib) {
        const double br = b[ib].real();
        const double bi = b[ib].imag();
        cd* row = out + ib * na;
        for (std::size_t ia = 0; ia < na; ++ia) {
            const double ar = a[ia].real();
            const double ai = a[ia].imag();
            row[ia] = cd{ar * br - ai * bi, ar * bi + ai * br};
        }
    }
}

} // namespace scalar

const Table& scalar_table() {
    static const Table table{
        scalar::hadamard,   scalar::diag_phase, scalar::controlled_flip,
        scalar::cswap_blocks, scalar::norm_sq,  scalar::prob_one,
        scalar::collapse,   scalar::scale,      scalar::tensor_product,
        "scalar",
    };
    return table;
}

} // namespace meqsim::kernels
