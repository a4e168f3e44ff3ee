#pragma once

#include <cstdint>

namespace cdgsym {

// Counter-based splitmix64. Streams are pure functions of (seed, stream index),
// so sweeps are reproducible bit-for-bit regardless of thread count or platform
// (integer arithmetic only).

inline std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    // stream `i` of a master seed: decorrelated starting state per sample index
    static SplitMix64 stream(std::uint64_t seed, std::uint64_t i) {
        return SplitMix64(mix64(seed + 0x9e3779b97f4a7c15ULL * (i + 1)));
    }

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ULL;
        return mix64(state_);
    }

    // uniform in [0, 1), 53-bit resolution
    double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    // true with probability 1/2 (top bit)
    bool next_bit() { return (next() >> 63) != 0; }

private:
    std::uint64_t state_;
};

}  // namespace cdgsym
