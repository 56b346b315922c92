#ifndef MRLB_RANDOM_HPP
#define MRLB_RANDOM_HPP

#include <cstdint>
#include <random>

namespace mrlb {

/// Seeded random stream. Draws are bit-identical across standard libraries:
/// mt19937_64 output is fully specified, and the unit-interval mapping below
/// does not go through std::uniform_real_distribution.
class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed = 42) : engine_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform integer in [0, bound). bound must be > 0.
    std::uint64_t below(std::uint64_t bound) {
        // rejection sampling keeps the draw unbiased
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t x;
        do {
            x = engine_();
        } while (x >= limit);
        return x % bound;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace mrlb

#endif  // MRLB_RANDOM_HPP
