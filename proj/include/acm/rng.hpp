#pragma once

#include <cstdint>
#include <random>

namespace acm {

// Deterministic seed mixing; keeps per-case streams independent.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t idx) {
    return splitmix64(seed ^ splitmix64(idx + 1));
}

// Bounded sampling without std::uniform_int_distribution (whose output is
// not pinned across standard libraries).
inline std::uint64_t rnd_below(std::mt19937_64& rng, std::uint64_t k) { return k ? rng() % k : 0; }

}  // namespace acm
