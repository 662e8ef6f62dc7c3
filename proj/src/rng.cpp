#include "klyachko/rng.hpp"

#include <stdexcept>

namespace klyachko {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
    std::uint64_t z = seed + (salt + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

long DeterministicRng::uniform(long lo, long hi) {
    if (lo > hi) throw std::invalid_argument("empty sampling range");
    std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t limit = range * (UINT64_MAX / range);
    std::uint64_t draw;
    do {
        draw = engine_();
    } while (draw >= limit);
    return lo + static_cast<long>(draw % range);
}

}  // namespace klyachko
