#include "meqsim/kernels/kernels.hpp"

#include <atomic>
#include <stdexcept>

namespace meqsim::kernels {

#if defined(MEQSIM_HAVE_AVX2_BUILD)
const Table* avx2_table(); // kernels_avx2.cpp
#endif

bool cpu_has_avx2() {
#if defined(MEQSIM_HAVE_AVX2_BUILD) && defined(__GNUC__)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const Table* table_for(Backend backend) {
    switch (backend) {
    case Backend::Scalar:
        return &scalar_table();
    case Backend::Avx2:
#if defined(MEQSIM_HAVE_AVX2_BUILD)
        if (cpu_has_avx2()) return avx2_table();
#endif
        return nullptr;
    }
    return nullptr;
}

namespace {
std::atomic<const Table*> g_forced{nullptr};
}

void force_backend(Backend backend) {
    const Table* t = table_for(backend);
    if (t == nullptr) {
        throw std::runtime_error("requested kernel backend is unavailable on this CPU");
    }
    g_forced.store(t);
}

void clear_forced_backend() { g_forced.store(nullptr); }

const Table& active() {
    if (const Table* forced = g_forced.load()) {
        return *forced;
    }
    if (const Table* t = table_for(Backend::Avx2)) {
        return *t;
    }
    return scalar_table();
}

} // namespace meqsim::kernels
