#pragma once

#include <cstdint>

// SplitMix64 with a fixed stream-splitting rule. The experiment stream for
// (seed, iteration) starts at splitmix(seed + GOLDEN * (iteration + 1));
// point k of an iteration consumes draws 4k..4k+3 (lon, lat, dlon, dlat).
// Fixing the derivation here keeps runs reproducible across thread counts.

namespace sfc {

struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t s) : state(s) {}

    uint64_t next() {
        uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1).
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

inline SplitMix64 iteration_stream(uint64_t seed, uint64_t iteration) {
    return SplitMix64(seed + 0x9E3779B97F4A7C15ull * (iteration + 1));
}

}  // namespace sfc
