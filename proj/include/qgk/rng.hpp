#pragma once

#include <cstdint>

namespace qgk {

// splitmix64. Used for all seeded random suites so that reports are
// byte-identical across platforms and standard library versions.
struct Rng {
    uint64_t state = 0;

    explicit Rng(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // uniform-ish in [0,n); modulo bias is irrelevant at our sizes
    uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }

    uint8_t pick_prime() {
        static constexpr uint8_t primes[4] = {2, 3, 5, 7};
        return primes[below(4)];
    }
};

}  // namespace qgk
