#pragma once

#include <cstdint>

namespace wqed {

/// SplitMix64 finalizer.
inline std::uint64_t mix64(std::uint64_t z) {
    z += 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Counter-keyed random stream: identical (seed, key_a, key_b) produce
/// identical draws on every platform, independent of call order between
/// streams. Used to make Monte-Carlo realizations reproducible per
/// (grid index, realization index).
class StreamRng {
public:
    StreamRng(std::uint64_t seed, std::uint64_t key_a, std::uint64_t key_b)
        : state_(mix64(mix64(mix64(seed) ^ key_a) ^ key_b)) {}

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    /// Uniform double in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
    std::uint64_t state_;
};

}  // namespace wqed
