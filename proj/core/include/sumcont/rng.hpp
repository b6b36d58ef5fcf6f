#pragma once

#include <cstdint>

namespace sumcont {

/**
 * Counter-based PRNG: the value at any index is a pure function of
 * (seed, index), so parallel or resumed sampling reproduces exactly.
 */
class CounterRng {
public:
    explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

    std::uint64_t at(std::uint64_t index) const {
        // splitmix64 finalizer over the keyed counter.
        std::uint64_t z = seed_ ^ (index * 0x9E3779B97F4A7C15ULL + 0xD1B54A32D192ED03ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, bound) via 128-bit multiply. bound >= 1.
    std::uint64_t below(std::uint64_t bound, std::uint64_t index) const {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(at(index)) * bound) >> 64);
    }

    /// Uniform double in [0, 1).
    double uniform01(std::uint64_t index) const {
        return static_cast<double>(at(index) >> 11) * 0x1.0p-53;
    }

    /// Stateful convenience: successive calls walk the counter.
    std::uint64_t next() { return at(cursor_++); }
    std::uint64_t next_below(std::uint64_t bound) { return below(bound, cursor_++); }
    double next_uniform01() { return uniform01(cursor_++); }

private:
    std::uint64_t seed_;
    std::uint64_t cursor_ = 0;
};

} // namespace sumcont
