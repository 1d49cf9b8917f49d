// AVX2 variants of the arithmetic kernels. Compiled with -mavx2 -mfma and
// only entered after a runtime CPU check, so the rest of the binary stays
// portable. Amplitudes are interleaved (re,im) doubles: one 256-bit vector
// holds two complex values.

#include "meqsim/kernels/kernels.hpp"

#include <cmath>
#include <immintrin.h>

namespace meqsim::kernels {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

inline double* as_doubles(cd* amps) { return reinterpret_cast<double*>(amps); }
inline const double* as_doubles(const cd* amps) {
    return reinterpret_cast<const double*>(amps);
}

void hadamard(cd* amps, std::size_t size, int q) {
    double* d = as_doubles(amps);
    const __m256d half_sqrt = _mm256_set1_pd(M_SQRT1_2);
    if (q == 0) {
        // Pairs are adjacent: one vector holds both partners.
        for (std::size_t i = 0; i + 1 < size; i += 2) {
            __m256d v = _mm256_loadu_pd(d + 2 * i);
            __m256d w = _mm256_permute2f128_pd(v, v, 0x01);
            __m256d sum = _mm256_add_pd(v, w);
            __m256d dif = _mm256_sub_pd(w, v); // lanes 2,3 carry a - b
            __m256d r = _mm256_blend_pd(sum, dif, 0b1100);
            _mm256_storeu_pd(d + 2 * i, _mm256_mul_pd(r, half_sqrt));
        }
        return;
    }
    const std::size_t stride = std::size_t{1} << q;
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; i += 2) {
            __m256d a = _mm256_loadu_pd(d + 2 * i);
            __m256d b = _mm256_loadu_pd(d + 2 * (i + stride));
            _mm256_storeu_pd(d + 2 * i, _mm256_mul_pd(_mm256_add_pd(a, b), half_sqrt));
            _mm256_storeu_pd(d + 2 * (i + stride),
                             _mm256_mul_pd(_mm256_sub_pd(a, b), half_sqrt));
        }
    }
}

void diag_phase(cd* amps, std::size_t size, int offset, int width,
                const std::int8_t* signs) {
    double* d = as_doubles(amps);
    const std::uint64_t mask = (std::uint64_t{1} << width) - 1;
    if (size < 2) {
        if (signs[0] < 0) amps[0] = -amps[0];
        return;
    }
    if (offset == 0) {
        // Sign may differ between the two complexes in a vector.
        const __m256d masks[4] = {
            _mm256_setr_pd(0.0, 0.0, 0.0, 0.0),
            _mm256_setr_pd(-0.0, -0.0, 0.0, 0.0),
            _mm256_setr_pd(0.0, 0.0, -0.0, -0.0),
            _mm256_setr_pd(-0.0, -0.0, -0.0, -0.0),
        };
        for (std::size_t i = 0; i < size; i += 2) {
            int combo = (signs[i & mask] < 0 ? 1 : 0) |
                        (signs[(i + 1) & mask] < 0 ? 2 : 0);
            if (combo == 0) continue;
            __m256d v = _mm256_loadu_pd(d + 2 * i);
            _mm256_storeu_pd(d + 2 * i, _mm256_xor_pd(v, masks[combo]));
        }
        return;
    }
    const __m256d neg = _mm256_set1_pd(-0.0);
    for (std::size_t i = 0; i < size; i += 2) {
        if (signs[(i >> offset) & mask] < 0) {
            __m256d v = _mm256_loadu_pd(d + 2 * i);
            _mm256_storeu_pd(d + 2 * i, _mm256_xor_pd(v, neg));
        }
    }
}

double norm_sq(const cd* amps, std::size_t size) {
    if (size < 2) return scalar_table().norm_sq(amps, size);
    const double* d = as_doubles(amps);
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t i = 0; i < 2 * size; i += 4) {
        __m256d v = _mm256_loadu_pd(d + i);
        acc = _mm256_fmadd_pd(v, v, acc);
    }
    return hsum(acc);
}

double prob_one(const cd* amps, std::size_t size, int q) {
    if (q == 0) return scalar_table().prob_one(amps, size, q);
    const double* d = as_doubles(amps);
    const std::size_t stride = std::size_t{1} << q;
    __m256d acc = _mm256_setzero_pd();
    for (std::size_t base = stride; base < size; base += 2 * stride) {
        for (std::size_t i = base; i < base + stride; i += 2) {
            __m256d v = _mm256_loadu_pd(d + 2 * i);
            acc = _mm256_fmadd_pd(v, v, acc);
        }
    }
    return hsum(acc);
}

void collapse(cd* amps, std::size_t size, int q, int bit, double factor) {
    double* d = as_doubles(amps);
    const __m256d f = _mm256_set1_pd(factor);
    if (q == 0) {
        const __m256d pattern = bit ? _mm256_setr_pd(0.0, 0.0, factor, factor)
                                    : _mm256_setr_pd(factor, factor, 0.0, 0.0);
        for (std::size_t i = 0; i + 1 < size; i += 2) {
            __m256d v = _mm256_loadu_pd(d + 2 * i);
            _mm256_storeu_pd(d + 2 * i, _mm256_mul_pd(v, pattern));
        }
        return;
    }
    const std::size_t stride = std::size_t{1} << q;
    const __m256d zero = _mm256_setzero_pd();
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        const std::size_t keep = bit ? base + stride : base;
        const std::size_t kill = bit ? base : base + stride;
        for (std::size_t i = 0; i < stride; i += 2) {
            __m256d v = _mm256_loadu_pd(d + 2 * (keep + i));
            _mm256_storeu_pd(d + 2 * (keep + i), _mm256_mul_pd(v, f));
            _mm256_storeu_pd(d + 2 * (kill + i), zero);
        }
    }
}

void scale(cd* amps, std::size_t size, double factor) {
    if (size < 2) {
        amps[0] *= factor;
        return;
    }
    double* d = as_doubles(amps);
    const __m256d f = _mm256_set1_pd(factor);
    for (std::size_t i = 0; i < 2 * size; i += 4) {
        _mm256_storeu_pd(d + i, _mm256_mul_pd(_mm256_loadu_pd(d + i), f));
    }
}

void tensor_product(cd* out, const cd* a, std::size_t na, const cd* b,
                    std::size_t nb) {
    if (na < 2) {
        scalar_table().tensor_product(out, a, na, b, nb);
        return;
    }
    const double* da = as_doubles(a);
    for (std::size_t ib = 0; ib < nb; ++ib) {
        const __m256d br = _mm256_set1_pd(b[ib].real());
        const __m256d bi = _mm256_setr_pd(-b[ib].imag(), b[ib].imag(),
                                          -b[ib].imag(), b[ib].imag());
        double* row = as_doubles(out + ib * na);
        for (std::size_t ia = 0; ia < na; ia += 2) {
            __m256d v = _mm256_loadu_pd(da + 2 * ia);
            __m256d vs = _mm256_permute_pd(v, 0b0101); // (im, re) per complex
            _mm256_storeu_pd(row + 2 * ia,
                             _mm256_fmadd_pd(v, br, _mm256_mul_pd(vs, bi)));
        }
    }
}

} // namespace

const Table* avx2_table() {
    static const Table table{
        hadamard,
        diag_phase,
        scalar_table().controlled_flip,
        scalar_table().cswap_blocks,
        norm_sq,
        prob_one,
        collapse,
        scale,
        tensor_product,
        "avx2",
    };
    return &table;
}

} // namespace meqsim::kernels
