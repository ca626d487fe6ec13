#pragma once

#include <cstdint>

namespace gbe {

/**
 * @brief splitmix64 pseudo-random generator (Steele, Lea & Flood 2014).
 *
 * State transition: state += 0x9E3779B97F4A7C15 per draw; the output is the
 * new state passed through two xor-shift-multiply mixing rounds. All sampling
 * decisions derive from the 64-bit integer stream, so sequences are
 * reproducible bit-for-bit across platforms and languages.
 */
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1) with 53-bit resolution (top bits of next()).
    double next_unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound) via rejection-free modulo of next().
    std::uint64_t next_below(std::uint64_t bound) {
        return next() % bound;
    }

private:
    std::uint64_t state_;
};

}  // namespace gbe
