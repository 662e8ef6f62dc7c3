#ifndef KLYACHKO_RNG_HPP
#define KLYACHKO_RNG_HPP

#include <cstdint>
#include <random>

namespace klyachko {

// splitmix64 step; used to derive independent sub-seeds (per point, per
// retry) from one user-facing seed.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt);

// mt19937_64 with explicit rejection sampling. std::uniform_int_distribution
// is implementation-defined, which would break bit-identical reports across
// standard libraries.
class DeterministicRng {
public:
    explicit DeterministicRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    // Uniform in [lo, hi], inclusive.
    long uniform(long lo, long hi);

private:
    std::mt19937_64 engine_;
};

}  // namespace klyachko

#endif
