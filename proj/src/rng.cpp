#include "meqsim/rng.hpp"

#include <stdexcept>

namespace meqsim {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::uint64_t fnv1a(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : s) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

} // namespace

std::uint64_t mix_seed(std::uint64_t master, std::string_view tag, std::uint64_t index) {
    std::uint64_t h = splitmix64(master ^ fnv1a(tag));
    return splitmix64(h ^ splitmix64(index));
}

Rng make_stream(std::uint64_t master, std::string_view tag, std::uint64_t index) {
    return Rng(mix_seed(master, tag, index));
}

std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) {
        throw std::invalid_argument("uniform_below: bound must be positive");
    }
    // Largest multiple of bound that fits; reject above it.
    std::uint64_t limit = ~0ULL - (~0ULL % bound);
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

} // namespace meqsim
