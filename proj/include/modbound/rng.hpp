#pragma once

#include <cstdint>
#include <random>

namespace modbound {

// SplitMix64 step; used to derive named substreams from one global seed so
// that component-level runs (generation, bisection retries, high-degree
// draws) are reproducible in isolation.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag) {
    return splitmix64(seed ^ splitmix64(tag));
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t tag, std::uint64_t index) {
    return splitmix64(mix_seed(seed, tag) ^ splitmix64(index + 0x51ed2701ULL));
}

// Stream tags for the named substreams expanded from a single global seed.
enum class StreamTag : std::uint64_t {
    generation = 1,
    bisection_retry = 2,
    high_degree_draw = 3,
    orientation = 4,
    experiment = 5,
};

inline std::mt19937_64 substream(std::uint64_t seed, StreamTag tag, std::uint64_t index = 0) {
    return std::mt19937_64(mix_seed(seed, static_cast<std::uint64_t>(tag), index));
}

// Uniform in [0, n). Rejection on the raw 64-bit output keeps results
// identical across standard libraries (std::uniform_int_distribution is
// implementation-defined).
inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
    if (n == 0) return 0;
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % n;
}

inline bool rand_bit(std::mt19937_64& rng) { return (rng() >> 63) != 0; }

// Uniform double in [0, 1) with 53 random bits.
inline double rand_unit(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace modbound
