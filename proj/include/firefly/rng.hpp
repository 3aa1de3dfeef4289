#pragma once

#include <cstdint>

namespace firefly {

/// SplitMix64: tiny, fast, and statistically solid enough for simulation
/// driving. Chosen over std::mt19937_64 because its state is a single word,
/// which makes cheap value-semantics streams and deterministic per-run seed
/// derivation trivial.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Uniform double in [0, 1), 53 bits of mantissa.
    double next_double() {
        return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound) via rejection; bound must be positive.
    std::uint64_t next_below(std::uint64_t bound) {
        const std::uint64_t threshold = (0 - bound) % bound;
        for (;;) {
            const std::uint64_t x = next_u64();
            if (x >= threshold) return x % bound;
        }
    }

private:
    std::uint64_t state_;
};

/// Derives a child seed from a base seed and an index.  Runs indexed this way
/// get independent streams regardless of scheduling, which keeps parallel
/// ensembles bit-reproducible.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
    SplitMix64 mix(base ^ (0x632BE59BD9B4E019ull * (index + 1)));
    mix.next_u64();
    return mix.next_u64();
}

}  // namespace firefly
