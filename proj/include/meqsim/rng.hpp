#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace meqsim {

using Rng = std::mt19937_64;

// Derives an independent stream seed from a master seed, a textual concern
// tag ("code", "inputs", "measure", ...) and an optional index (trial
// number). Streams are stable: adding draws to one stream never perturbs
// another.
std::uint64_t mix_seed(std::uint64_t master, std::string_view tag, std::uint64_t index = 0);

Rng make_stream(std::uint64_t master, std::string_view tag, std::uint64_t index = 0);

// Uniform integer in [0, bound), bound >= 1. Rejection sampling, so results
// do not depend on library distribution internals.
std::uint64_t uniform_below(Rng& rng, std::uint64_t bound);

inline bool uniform_bit(Rng& rng) { return (rng() >> 63) != 0; }

// Uniform double in [0, 1) with 53 random bits.
inline double uniform_real(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

} // namespace meqsim
