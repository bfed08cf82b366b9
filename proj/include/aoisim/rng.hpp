#pragma once

#include <cstdint>
#include <random>

namespace aoisim {

// All simulation randomness flows through Rng so that results are
// bit-reproducible across platforms. std::mt19937_64 is fully specified by
// the standard; the distribution helpers below replace the
// implementation-defined std::uniform_* distributions.
using Rng = std::mt19937_64;

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Counter-mode seed derivation: run r draws the r-th output of a splitmix64
// stream seeded with master_seed. Adding runs never perturbs earlier ones.
inline std::uint64_t derive_run_seed(std::uint64_t master_seed, std::uint64_t run_index) {
    return splitmix64(master_seed + run_index * 0x9E3779B97F4A7C15ULL);
}

// Uniform draw from [0, n), unbiased via rejection.
inline std::uint64_t uniform_index(Rng& rng, std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        const std::uint64_t r = rng();
        if (r >= threshold) return r % n;
    }
}

// Uniform draw from [0, 1) with 53 random bits.
inline double uniform_unit(Rng& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace aoisim
