#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "meqsim/kernels/kernels.hpp"
#include "meqsim/rng.hpp"
#include "test_util.hpp"

#include <cmath>

using namespace meqsim;
using kernels::cd;

namespace {

bool avx2_available() { return kernels::table_for(kernels::Backend::Avx2) != nullptr; }

std::vector<std::int8_t> random_signs(std::size_t count, Rng& rng) {
    std::vector<std::int8_t> signs(count);
    for (auto& s : signs) s = uniform_bit(rng) ? -1 : 1;
    return signs;
}

} // namespace

TEST_CASE("scalar and avx2 kernels agree on random states") {
    if (!avx2_available()) {
        MESSAGE("AVX2 unavailable; dispatch falls back to scalar");
        return;
    }
    const auto& sc = kernels::scalar_table();
    const auto& vx = *kernels::table_for(kernels::Backend::Avx2);
    Rng rng = make_stream(2024, "kernel-equivalence");

    for (int q = 1; q <= 10; ++q) {
        const std::size_t size = std::size_t{1} << q;
        auto base = testutil::random_amplitudes(size, rng);

        for (int target = 0; target < q; ++target) {
            auto a = base;
            auto b = base;
            sc.hadamard(a.data(), size, target);
            vx.hadamard(b.data(), size, target);
            CAPTURE(q);
            CAPTURE(target);
            CHECK(testutil::max_abs_diff(a, b) < 1e-14);

            a = base;
            b = base;
            double f = 0.25 + 0.5 * uniform_real(rng);
            sc.collapse(a.data(), size, target, target % 2, f);
            vx.collapse(b.data(), size, target, target % 2, f);
            CHECK(testutil::max_abs_diff(a, b) < 1e-14);

            CHECK(sc.prob_one(base.data(), size, target) ==
                  doctest::Approx(vx.prob_one(base.data(), size, target)).epsilon(1e-12));
        }

        for (int offset = 0; offset < q; ++offset) {
            for (int width = 1; offset + width <= q && width <= 4; ++width) {
                auto signs = random_signs(std::size_t{1} << width, rng);
                auto a = base;
                auto b = base;
                sc.diag_phase(a.data(), size, offset, width, signs.data());
                vx.diag_phase(b.data(), size, offset, width, signs.data());
                CHECK(testutil::max_abs_diff(a, b) == 0.0);
            }
        }

        CHECK(sc.norm_sq(base.data(), size) ==
              doctest::Approx(vx.norm_sq(base.data(), size)).epsilon(1e-12));

        auto a = base;
        auto b = base;
        sc.scale(a.data(), size, 1.7);
        vx.scale(b.data(), size, 1.7);
        CHECK(testutil::max_abs_diff(a, b) == 0.0);
    }
}

TEST_CASE("scalar and avx2 tensor products agree") {
    if (!avx2_available()) return;
    const auto& sc = kernels::scalar_table();
    const auto& vx = *kernels::table_for(kernels::Backend::Avx2);
    Rng rng = make_stream(7, "kernel-tensor");

    for (int qa = 0; qa <= 5; ++qa) {
        for (int qb = 0; qb <= 5; ++qb) {
            const std::size_t na = std::size_t{1} << qa;
            const std::size_t nb = std::size_t{1} << qb;
            auto a = testutil::random_amplitudes(na, rng);
            auto b = testutil::random_amplitudes(nb, rng);
            std::vector<cd> out_s(na * nb), out_v(na * nb);
            sc.tensor_product(out_s.data(), a.data(), na, b.data(), nb);
            vx.tensor_product(out_v.data(), a.data(), na, b.data(), nb);
            CHECK(testutil::max_abs_diff(out_s, out_v) < 1e-15);
        }
    }
}

TEST_CASE("hadamard kernel is an involution up to rounding") {
    const auto& sc = kernels::scalar_table();
    Rng rng = make_stream(11, "kernel-hh");
    for (int q = 1; q <= 8; ++q) {
        const std::size_t size = std::size_t{1} << q;
        auto base = testutil::random_amplitudes(size, rng);
        auto a = base;
        for (int target = 0; target < q; ++target) {
            sc.hadamard(a.data(), size, target);
            sc.hadamard(a.data(), size, target);
        }
        CHECK(testutil::max_abs_diff(a, base) < 1e-12);
    }
}

TEST_CASE("controlled_flip moves the expected pairs") {
    const auto& sc = kernels::scalar_table();
    // |01> on two qubits: X on qubit 1 -> |11> (index 1 -> 3).
    std::vector<cd> amps{cd{0, 0}, cd{1, 0}, cd{0, 0}, cd{0, 0}};
    sc.controlled_flip(amps.data(), amps.size(), 0, 1);
    CHECK(std::abs(amps[3] - cd{1, 0}) == 0.0);
    // CNOT controlled on qubit 0: |11> -> |01>.
    sc.controlled_flip(amps.data(), amps.size(), 1, 1);
    CHECK(std::abs(amps[1] - cd{1, 0}) == 0.0);
}

TEST_CASE("cswap_blocks exchanges field values under the control") {
    const auto& sc = kernels::scalar_table();
    // 5 qubits: control bit 4, block a = bits [0,2), block b = bits [2,4).
    // Basis |a=01, b=10, c=1|: index = 1 + (2 << 2) + 16 = 25.
    std::vector<cd> amps(32, cd{0, 0});
    amps[25] = cd{1, 0};
    sc.cswap_blocks(amps.data(), amps.size(), 4, 0, 2, 2);
    // Swapped: a=10, b=01 -> index 2 + (1 << 2) + 16 = 22.
    CHECK(std::abs(amps[22] - cd{1, 0}) == 0.0);
    CHECK(std::abs(amps[25]) == 0.0);

    // Control clear: nothing moves.
    std::vector<cd> rest(32, cd{0, 0});
    rest[9] = cd{1, 0};
    sc.cswap_blocks(rest.data(), rest.size(), 4, 0, 2, 2);
    CHECK(std::abs(rest[9] - cd{1, 0}) == 0.0);
}

TEST_CASE("forced backend switches the active table") {
    kernels::force_backend(kernels::Backend::Scalar);
    CHECK(std::string(kernels::active().name) == "scalar");
    kernels::clear_forced_backend();
    if (avx2_available()) {
        CHECK(std::string(kernels::active().name) == "avx2");
    }
}
